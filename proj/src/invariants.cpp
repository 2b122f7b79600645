#include "edgesub/invariants.hpp"

#include <algorithm>
#include <queue>
#include <vector>

namespace edgesub {

GraphInvariants graph_invariants(const Graph& g) {
    GraphInvariants out;
    out.component_count = g.component_count();
    out.betti_number =
        static_cast<long>(g.edge_count()) - g.vertex_count() + out.component_count;
    auto deg = g.degrees();
    for (int d : deg) {
        out.max_degree = std::max(out.max_degree, d);
        if (d == 0) ++out.isolated_vertex_count;
    }
    return out;
}

bool is_connected_graph(const Graph& g) { return g.component_count() == 1; }

bool is_forest_graph(const Graph& g) {
    return g.edge_count() == g.vertex_count() - g.component_count();
}

bool is_bipartite_graph(const Graph& g) {
    const int n = g.vertex_count();
    auto adj = g.adjacency_lists();
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v]) {
                if (side[w] < 0) {
                    side[w] = side[v] ^ 1;
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Blossom algorithm, O(V^3): BFS from each free vertex, contracting odd
// cycles through their base vertex.
class Blossom {
  public:
    explicit Blossom(const Graph& g)
        : n_(g.vertex_count()), adj_(g.adjacency_lists()), match_(n_, -1), parent_(n_),
          base_(n_) {}

    int run() {
        int matched = 0;
        // Greedy seed.
        for (int v = 0; v < n_; ++v) {
            if (match_[v] >= 0) continue;
            for (int w : adj_[v]) {
                if (match_[w] < 0) {
                    match_[v] = w;
                    match_[w] = v;
                    ++matched;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0 && augment_from(v)) ++matched;
        return matched;
    }

  private:
    int lca(int a, int b) {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] < 0) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(std::vector<char>& blossom, int v, int b, int child) {
        while (base_[v] != b) {
            blossom[base_[v]] = 1;
            blossom[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    bool augment_from(int root) {
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        std::vector<char> used(n_, 0);
        std::queue<int> q;
        used[root] = 1;
        q.push(root);

        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj_[v]) {
                if (base_[v] == base_[w] || match_[v] == w) continue;
                if (w == root || (match_[w] >= 0 && parent_[match_[w]] >= 0)) {
                    // Odd cycle: contract the blossom at the common base.
                    int b = lca(v, w);
                    std::vector<char> blossom(n_, 0);
                    mark_path(blossom, v, b, w);
                    mark_path(blossom, w, b, v);
                    for (int i = 0; i < n_; ++i) {
                        if (blossom[base_[i]]) {
                            base_[i] = b;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[w] < 0) {
                    parent_[w] = v;
                    if (match_[w] < 0) {
                        // Augmenting path found; flip it.
                        int u = w;
                        while (u >= 0) {
                            int pv = parent_[u];
                            int ppv = match_[pv];
                            match_[u] = pv;
                            match_[pv] = u;
                            u = ppv;
                        }
                        return true;
                    }
                    used[match_[w]] = 1;
                    q.push(match_[w]);
                }
            }
        }
        return false;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
};

}  // namespace

int max_matching_size(const Graph& g) { return Blossom(g).run(); }

}  // namespace edgesub
