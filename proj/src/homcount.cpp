#include "edgesub/homcount.hpp"

#include <algorithm>
#include <vector>

#include "edgesub/errors.hpp"

namespace edgesub {

namespace {

// Assignment order: BFS component by component, starting from high-degree
// vertices so adjacency constraints bind early.
std::vector<int> pattern_order(const Graph& f) {
    const int n = f.vertex_count();
    auto adj = f.adjacency_lists();
    auto deg = f.degrees();
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    while (static_cast<int>(order.size()) < n) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!seen[v] && (best < 0 || deg[v] > deg[best])) best = v;
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
    return order;
}

constexpr int kHostCap = 2048;

struct MapCounter {
    const Graph& f;
    const Graph& g;
    bool injective;
    bool count_all;              // false: stop at the first map
    const std::vector<int>* candidate_colours = nullptr;  // f-vertex -> g colour class
    const std::vector<int>* g_colours = nullptr;

    std::vector<int> order;
    std::vector<std::uint64_t> fbits;
    std::vector<int> assign;     // f vertex -> g vertex
    std::vector<char> used;
    int gn;
    std::vector<char> gadj;      // host adjacency matrix, row major
    std::vector<int> gdeg, fdeg;
    Int count = 0;
    bool found = false;

    MapCounter(const Graph& f_, const Graph& g_, bool inj, bool all)
        : f(f_), g(g_), injective(inj), count_all(all), order(pattern_order(f_)),
          fbits(f_.adjacency_bits()), assign(f_.vertex_count(), -1),
          used(g_.vertex_count(), 0), gn(g_.vertex_count()), gdeg(g_.degrees()),
          fdeg(f_.degrees()) {
        if (gn > kHostCap)
            throw capacity_error("map search: host has " + std::to_string(gn) +
                                 " vertices, cap is " + std::to_string(kHostCap));
        gadj.assign(static_cast<size_t>(gn) * gn, 0);
        for (const auto& [u, v] : g_.edges()) {
            gadj[static_cast<size_t>(u) * gn + v] = 1;
            gadj[static_cast<size_t>(v) * gn + u] = 1;
        }
    }

    void run() { dfs(0); }

    void dfs(size_t pos) {
        if (pos == order.size()) {
            ++count;
            found = true;
            return;
        }
        int v = order[pos];
        for (int w = 0; w < gn; ++w) {
            if (injective && used[w]) continue;
            if (injective && gdeg[w] < fdeg[v]) continue;
            if (candidate_colours && (*g_colours)[w] != (*candidate_colours)[v]) continue;
            bool ok = true;
            for (size_t i = 0; i < pos && ok; ++i) {
                int u = order[i];
                if ((fbits[v] >> u) & 1)
                    ok = gadj[static_cast<size_t>(w) * gn + assign[u]];
            }
            if (!ok) continue;
            assign[v] = w;
            if (injective) used[w] = 1;
            dfs(pos + 1);
            if (!count_all && found) return;
            if (injective) used[w] = 0;
            assign[v] = -1;
        }
    }
};

void check_pattern_cap(const Graph& f, const Budgets& budgets, const char* what) {
    if (f.vertex_count() > budgets.hom_pattern_cap)
        throw capacity_error(std::string(what) + ": pattern has " +
                             std::to_string(f.vertex_count()) + " vertices, cap is " +
                             std::to_string(budgets.hom_pattern_cap));
}

}  // namespace

Int count_homs(const Graph& f, const Graph& g, const Budgets& budgets) {
    check_pattern_cap(f, budgets, "count_homs");
    if (f.vertex_count() == 0) return 1;
    if (g.vertex_count() == 0) return 0;
    MapCounter counter(f, g, false, true);
    counter.run();
    return counter.count;
}

Int count_embs(const Graph& f, const Graph& g, const Budgets& budgets) {
    check_pattern_cap(f, budgets, "count_embs");
    if (f.vertex_count() > g.vertex_count()) return 0;
    if (f.vertex_count() == 0) return 1;
    MapCounter counter(f, g, true, true);
    counter.run();
    return counter.count;
}

Int count_auts(const Graph& g, const Budgets& budgets) {
    // Injective edge-preserving self-maps of a finite graph preserve edge
    // counts, hence are automorphisms.
    Budgets b = budgets;
    b.hom_pattern_cap = std::max(b.hom_pattern_cap, g.vertex_count());
    return count_embs(g, g, b);
}

Int count_subs(const Graph& h, const Graph& g, const Budgets& budgets) {
    Int embs = count_embs(h, g, budgets);
    if (embs == 0) return 0;
    return embs / count_auts(h, budgets);
}

bool embedding_exists(const Graph& f, const Graph& g, const Budgets& budgets) {
    check_pattern_cap(f, budgets, "embedding_exists");
    if (f.vertex_count() > g.vertex_count() || f.edge_count() > g.edge_count()) return false;
    if (f.vertex_count() == 0) return true;
    MapCounter counter(f, g, true, false);
    counter.run();
    return counter.found;
}

Int count_cp_homs(const HColouredGraph& f, const HColouredGraph& g) {
    if (!f.same_pattern(g)) throw usage_error("count_cp_homs: pattern mismatch");
    if (f.graph().vertex_count() == 0) return 1;
    if (g.graph().vertex_count() == 0) return 0;
    MapCounter counter(f.graph(), g.graph(), false, true);
    counter.candidate_colours = &f.colours();
    counter.g_colours = &g.colours();
    counter.run();
    return counter.count;
}

}  // namespace edgesub
