#include "edgesub/minor.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "edgesub/errors.hpp"
#include "edgesub/homcount.hpp"
#include "edgesub/invariants.hpp"
#include "edgesub/isomorph.hpp"

namespace edgesub {

namespace {

Graph strip_isolated(const Graph& g) {
    std::vector<int> ids(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) ids[i] = i;
    return induced_by_edges(g, ids);
}

Graph delete_edge(const Graph& g, int id) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.edge_count(); ++i)
        if (i != id) edges.push_back(g.edge(i));
    return Graph(g.vertex_count(), std::move(edges));
}

// Simple-graph contraction: merge v into u, drop the contracted edge and
// any parallels it creates.
Graph contract_edge(const Graph& g, int id) {
    auto [u, v] = g.edge(id);
    std::vector<std::pair<int, int>> edges;
    auto remap = [&](int w) {
        if (w == v) return u;
        if (w == g.vertex_count() - 1) return v;
        return w;
    };
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == id) continue;
        int a = remap(g.edge(i).first);
        int b = remap(g.edge(i).second);
        if (a == b) continue;
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(g.vertex_count() - 1, std::move(edges));
}

// Minor-monotone invariants: a violation certifies non-containment.
bool invariant_reject(const Graph& p, const Graph& h) {
    if (p.edge_count() > h.edge_count() || p.vertex_count() > h.vertex_count()) return true;
    auto ip = graph_invariants(p);
    auto ih = graph_invariants(h);
    if (ip.betti_number > ih.betti_number) return true;
    if (p.edge_count() > 0 && max_matching_size(p) > max_matching_size(h)) return true;
    return false;
}

// P equals H after deleting surplus isolated host vertices?
bool direct_accept(const Graph& p, const Graph& h, const Budgets& budgets) {
    if (p.edge_count() != h.edge_count() || p.vertex_count() > h.vertex_count()) return false;
    return are_isomorphic(strip_isolated(p), strip_isolated(h), budgets);
}

// Subgraph containment implies minor containment; cheap and catches most
// positive instances before any recursion.
bool embedding_accept(const Graph& p, const Graph& h, const Budgets& budgets) {
    Graph sp = strip_isolated(p);
    if (sp.vertex_count() > budgets.hom_pattern_cap) return false;
    try {
        return embedding_exists(sp, h, budgets);
    } catch (const capacity_error&) {
        return false;
    }
}

struct MinorSearch {
    Budgets budgets;
    std::map<std::pair<std::string, std::string>, bool> memo;
    long long nodes_left;

    explicit MinorSearch(const Budgets& b) : budgets(b), nodes_left(b.minor_node_budget) {}

    std::string state_key(const Graph& g) {
        if (g.vertex_count() <= budgets.canonical_cap) return canonical_key(g, budgets);
        std::string key = "raw:" + std::to_string(g.vertex_count()) + ";";
        for (const auto& [u, v] : g.edges())
            key += std::to_string(u) + "-" + std::to_string(v) + ",";
        return key;
    }

    // Delete/contract core; correct for arbitrary (possibly disconnected)
    // pattern and host.
    bool core(const Graph& p, const Graph& h) {
        if (p.edge_count() == 0) return p.vertex_count() <= h.vertex_count();
        if (invariant_reject(p, h)) return false;
        if (direct_accept(p, h, budgets)) return true;
        if (embedding_accept(p, h, budgets)) return true;
        if (h.edge_count() <= p.edge_count()) return false;
        if (h.vertex_count() > budgets.minor_host_cap)
            throw capacity_error("minor: host of " + std::to_string(h.vertex_count()) +
                                 " vertices exceeds the delete/contract cap of " +
                                 std::to_string(budgets.minor_host_cap));
        if (--nodes_left < 0) throw capacity_error("minor: node budget exceeded");

        auto key = std::make_pair(state_key(p), state_key(h));
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool found = false;
        for (int e = 0; e < h.edge_count() && !found; ++e) {
            if (core(p, contract_edge(h, e))) found = true;
            else if (core(p, delete_edge(h, e))) found = true;
        }
        memo[key] = found;
        return found;
    }

    // Assign pattern components to host components; a host component may
    // receive several pattern components, re-checked as a disjoint union.
    bool assign(const std::vector<Graph>& pcomps, size_t i, std::vector<Graph>& unions,
                const std::vector<Graph>& hcomps, std::vector<int>& where,
                const std::vector<std::string>& hkeys) {
        if (i == pcomps.size()) return true;
        std::vector<std::string> failed_fresh;
        for (size_t j = 0; j < hcomps.size(); ++j) {
            // Identical pattern components only move forward across hosts.
            if (i > 0 && pcomps[i] == pcomps[i - 1] && static_cast<int>(j) < where[i - 1])
                continue;
            bool fresh = unions[j].vertex_count() == 0;
            if (fresh &&
                std::find(failed_fresh.begin(), failed_fresh.end(), hkeys[j]) != failed_fresh.end())
                continue;
            Graph candidate = disjoint_union(unions[j], pcomps[i]);
            if (!core(candidate, hcomps[j])) {
                if (fresh) failed_fresh.push_back(hkeys[j]);
                continue;
            }
            Graph saved = unions[j];
            unions[j] = candidate;
            where[i] = static_cast<int>(j);
            if (assign(pcomps, i + 1, unions, hcomps, where, hkeys)) return true;
            unions[j] = saved;
            where[i] = -1;
        }
        return false;
    }
};

std::vector<Graph> components_of(const Graph& g) {
    auto label = g.component_labels();
    int parts = 0;
    for (int l : label) parts = std::max(parts, l + 1);
    std::vector<std::vector<int>> vertices(parts);
    for (int v = 0; v < g.vertex_count(); ++v) vertices[label[v]].push_back(v);
    std::vector<Graph> out;
    for (int c = 0; c < parts; ++c) {
        std::vector<int> relabel(g.vertex_count(), -1);
        for (size_t k = 0; k < vertices[c].size(); ++k) relabel[vertices[c][k]] = static_cast<int>(k);
        std::vector<std::pair<int, int>> edges;
        for (const auto& [u, v] : g.edges())
            if (label[u] == c) edges.emplace_back(relabel[u], relabel[v]);
        out.emplace_back(static_cast<int>(vertices[c].size()), std::move(edges));
    }
    return out;
}

}  // namespace

bool minor_contains(const Graph& pattern, const Graph& host, const Budgets& budgets) {
    if (pattern.edge_count() == 0) return pattern.vertex_count() <= host.vertex_count();
    if (invariant_reject(pattern, host)) return false;
    if (embedding_accept(pattern, host, budgets)) return true;

    MinorSearch search(budgets);
    auto pcomps = components_of(pattern);
    auto hcomps = components_of(host);
    if (pcomps.size() == 1 && hcomps.size() == 1) return search.core(pattern, host);

    // Big components first so infeasible assignments die early.
    std::sort(pcomps.begin(), pcomps.end(), [](const Graph& a, const Graph& b) {
        if (a.edge_count() != b.edge_count()) return a.edge_count() > b.edge_count();
        if (a.vertex_count() != b.vertex_count()) return a.vertex_count() > b.vertex_count();
        return a < b;
    });
    std::vector<Graph> unions(hcomps.size(), Graph(0, {}));
    std::vector<int> where(pcomps.size(), -1);
    std::vector<std::string> hkeys;
    hkeys.reserve(hcomps.size());
    for (const auto& hc : hcomps) hkeys.push_back(search.state_key(hc));
    return search.assign(pcomps, 0, unions, hcomps, where, hkeys);
}

}  // namespace edgesub
