#include "edgesub/isomorph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "edgesub/errors.hpp"

namespace edgesub {

namespace {

// Iso-invariant vertex signature: degree plus sorted neighbour degrees.
std::vector<std::vector<int>> vertex_signatures(const Graph& g) {
    auto deg = g.degrees();
    auto adj = g.adjacency_lists();
    std::vector<std::vector<int>> sig(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> s;
        s.push_back(deg[v]);
        std::vector<int> nd;
        for (int w : adj[v]) nd.push_back(deg[w]);
        std::sort(nd.begin(), nd.end());
        s.insert(s.end(), nd.begin(), nd.end());
        sig[v] = std::move(s);
    }
    return sig;
}

struct IsoSearch {
    const Graph& g1;
    const Graph& g2;
    std::vector<std::uint64_t> bits1, bits2;
    std::vector<std::vector<int>> sig1, sig2;
    std::vector<int> order;  // g1 vertices in assignment order
    std::vector<int> map;    // g1 vertex -> g2 vertex
    std::vector<char> used;  // g2 vertex used
    long long nodes_left;

    IsoSearch(const Graph& a, const Graph& b, long long node_budget)
        : g1(a), g2(b), bits1(a.adjacency_bits()), bits2(b.adjacency_bits()),
          sig1(vertex_signatures(a)), sig2(vertex_signatures(b)),
          map(a.vertex_count(), -1), used(b.vertex_count(), 0), nodes_left(node_budget) {
        // BFS order from the rarest signature so constraints bind early.
        std::map<std::vector<int>, int> freq;
        for (const auto& s : sig1) ++freq[s];
        int n = g1.vertex_count();
        std::vector<char> seen(n, 0);
        auto adj = g1.adjacency_lists();
        while (static_cast<int>(order.size()) < n) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (seen[v]) continue;
                if (best < 0 || freq[sig1[v]] < freq[sig1[best]] ||
                    (freq[sig1[v]] == freq[sig1[best]] && sig1[v] > sig1[best]))
                    best = v;
            }
            // BFS through the component of `best`.
            std::vector<int> queue{best};
            seen[best] = 1;
            size_t head = 0;
            while (head < queue.size()) {
                int v = queue[head++];
                order.push_back(v);
                for (int w : adj[v])
                    if (!seen[w]) {
                        seen[w] = 1;
                        queue.push_back(w);
                    }
            }
        }
    }

    bool search(size_t pos) {
        if (pos == order.size()) return true;
        if (--nodes_left < 0) throw capacity_error("isomorphism: node budget exceeded");
        int v = order[pos];
        for (int w = 0; w < g2.vertex_count(); ++w) {
            if (used[w] || sig1[v] != sig2[w]) continue;
            bool ok = true;
            for (size_t i = 0; i < pos && ok; ++i) {
                int u = order[i];
                bool e1 = (bits1[v] >> u) & 1;
                bool e2 = (bits2[w] >> map[u]) & 1;
                if (e1 != e2) ok = false;
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (search(pos + 1)) return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    }
};

bool connected_iso(const Graph& a, const Graph& b, const Budgets& budgets) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.vertex_count() > budgets.iso_component_cap)
        throw capacity_error("isomorphism: component exceeds vertex cap (" +
                             std::to_string(a.vertex_count()) + " > " +
                             std::to_string(budgets.iso_component_cap) + ")");
    auto s1 = vertex_signatures(a);
    auto s2 = vertex_signatures(b);
    auto t1 = s1, t2 = s2;
    std::sort(t1.begin(), t1.end());
    std::sort(t2.begin(), t2.end());
    if (t1 != t2) return false;
    IsoSearch search(a, b, budgets.iso_node_budget);
    return search.search(0);
}

std::vector<Graph> split_components(const Graph& g) {
    auto label = g.component_labels();
    int parts = 0;
    for (int l : label) parts = std::max(parts, l + 1);
    std::vector<std::vector<int>> vertices(parts);
    for (int v = 0; v < g.vertex_count(); ++v) vertices[label[v]].push_back(v);
    std::vector<Graph> out;
    for (int c = 0; c < parts; ++c) {
        std::vector<int> relabel(g.vertex_count(), -1);
        for (size_t i = 0; i < vertices[c].size(); ++i) relabel[vertices[c][i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> edges;
        for (const auto& [u, v] : g.edges())
            if (label[u] == c) edges.emplace_back(relabel[u], relabel[v]);
        out.emplace_back(static_cast<int>(vertices[c].size()), std::move(edges));
    }
    return out;
}

std::string component_key(const Graph& g) {
    auto sig = vertex_signatures(g);
    std::sort(sig.begin(), sig.end());
    std::string key = std::to_string(g.vertex_count()) + ";" + std::to_string(g.edge_count());
    for (const auto& s : sig) {
        key += '|';
        for (int x : s) key += std::to_string(x) + ",";
    }
    return key;
}

}  // namespace

bool are_isomorphic(const Graph& g1, const Graph& g2, const Budgets& budgets) {
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
    auto comps1 = split_components(g1);
    auto comps2 = split_components(g2);
    if (comps1.size() != comps2.size()) return false;

    std::map<std::string, std::vector<const Graph*>> byKey1, byKey2;
    for (const auto& c : comps1) byKey1[component_key(c)].push_back(&c);
    for (const auto& c : comps2) byKey2[component_key(c)].push_back(&c);
    if (byKey1.size() != byKey2.size()) return false;
    for (const auto& [key, group1] : byKey1) {
        auto it = byKey2.find(key);
        if (it == byKey2.end() || it->second.size() != group1.size()) return false;
        // Isomorphism is transitive, so greedy matching inside a group is safe.
        std::vector<char> used(group1.size(), 0);
        for (const Graph* c1 : group1) {
            bool matched = false;
            for (size_t j = 0; j < it->second.size() && !matched; ++j) {
                if (used[j]) continue;
                if (connected_iso(*c1, *it->second[j], budgets)) {
                    used[j] = 1;
                    matched = true;
                }
            }
            if (!matched) return false;
        }
    }
    return true;
}

std::uint64_t invariant_hash(const Graph& g) {
    auto sig = vertex_signatures(g);
    std::sort(sig.begin(), sig.end());
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    };
    mix(g.vertex_count());
    mix(g.edge_count());
    for (const auto& s : sig) {
        mix(0xfeed);
        for (int x : s) mix(static_cast<std::uint64_t>(x));
    }
    return h;
}

namespace {

// Minimal upper-triangle adjacency bitstring over degree-sorted labellings.
struct CanonicalSearch {
    const Graph& g;
    std::vector<std::uint64_t> bits;
    std::vector<std::vector<int>> sig;
    std::vector<std::vector<int>> slot_sig;  // required signature per position
    std::vector<char> used;
    std::vector<int> assign;  // position -> vertex
    std::string best;
    std::string current;

    explicit CanonicalSearch(const Graph& graph)
        : g(graph), bits(graph.adjacency_bits()), sig(vertex_signatures(graph)),
          used(graph.vertex_count(), 0), assign(graph.vertex_count(), -1) {
        slot_sig = sig;
        std::sort(slot_sig.begin(), slot_sig.end());
    }

    void run() {
        current.reserve(g.vertex_count() * (g.vertex_count() - 1) / 2);
        dfs(0);
    }

    void dfs(int pos) {
        int n = g.vertex_count();
        if (pos == n) {
            if (best.empty() || current < best) best = current;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || sig[v] != slot_sig[pos]) continue;
            std::string row;
            row.reserve(pos);
            for (int i = 0; i < pos; ++i)
                row.push_back(((bits[v] >> assign[i]) & 1) ? '1' : '0');
            size_t before = current.size();
            current += row;
            if (best.empty() || current <= best.substr(0, current.size())) {
                used[v] = 1;
                assign[pos] = v;
                dfs(pos + 1);
                assign[pos] = -1;
                used[v] = 0;
            }
            current.resize(before);
        }
    }
};

}  // namespace

std::string canonical_key(const Graph& g, const Budgets& budgets) {
    if (g.vertex_count() > budgets.canonical_cap)
        throw capacity_error("canonical_key: graph exceeds vertex cap (" +
                             std::to_string(g.vertex_count()) + " > " +
                             std::to_string(budgets.canonical_cap) + ")");
    std::string head = std::to_string(g.vertex_count()) + ";" + std::to_string(g.edge_count()) + ";";
    if (g.vertex_count() == 0) return head;
    CanonicalSearch search(g);
    // Degree-sequence header keeps keys of different degree profiles apart.
    for (const auto& s : search.slot_sig) {
        for (int x : s) head += std::to_string(x) + ",";
        head += '|';
    }
    search.run();
    return head + ":" + search.best;
}

}  // namespace edgesub
