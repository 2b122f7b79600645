#include <doctest.h>

#include <functional>

#include "edgesub/errors.hpp"
#include "edgesub/family.hpp"
#include "edgesub/isomorph.hpp"
#include "edgesub/minor.hpp"
#include "oracles.hpp"

using namespace edgesub;
using S = GraphFamilySpec;

TEST_CASE("isomorphism on named pairs") {
    CHECK(are_isomorphic(generate_family(S::cycle(3)), generate_family(S::complete(3))));
    CHECK_FALSE(are_isomorphic(generate_family(S::matching(2)), generate_family(S::path(2))));

    // Torus drawn as a grid with wraparound rows/columns.
    long l = 3;
    std::vector<std::pair<int, int>> edges;
    auto id = [&](long i, long j) { return static_cast<int>(i * l + j); };
    for (long i = 0; i < l; ++i)
        for (long j = 0; j < l; ++j) {
            edges.emplace_back(id(i, j), id(i, (j + 1) % l));
            edges.emplace_back(id(i, j), id((i + 1) % l, j));
        }
    Graph wraparound(static_cast<int>(l * l), edges);
    CHECK(are_isomorphic(wraparound, generate_family(S::torus(3))));
}

TEST_CASE("isomorphism is an equivalence relation on a corpus") {
    std::mt19937_64 rng(31337);
    std::vector<Graph> corpus;
    for (int trial = 0; trial < 12; ++trial)
        corpus.push_back(oracles::random_graph(rng, 4 + static_cast<int>(rng() % 4), 0.5));
    for (const auto& g : corpus) CHECK(are_isomorphic(g, g));
    for (size_t a = 0; a < corpus.size(); ++a)
        for (size_t b = a + 1; b < corpus.size(); ++b)
            CHECK(are_isomorphic(corpus[a], corpus[b]) == are_isomorphic(corpus[b], corpus[a]));
    // Transitivity spot check through relabelled copies.
    for (const auto& g : corpus) {
        std::vector<int> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
        Graph shuffled(g.vertex_count(), edges);
        CHECK(are_isomorphic(g, shuffled));
        CHECK(canonical_key(g) == canonical_key(shuffled));
    }
}

TEST_CASE("canonical keys separate non-isomorphic graphs") {
    // All 3-edge iso classes have distinct keys.
    std::vector<Graph> classes = {
        generate_family(S::matching(3)),
        generate_family(S::join({S::matching(1), S::path(2)})),
        generate_family(S::path(3)),
        generate_family(S::complete(3)),
        generate_family(S::star(3)),
    };
    for (size_t a = 0; a < classes.size(); ++a)
        for (size_t b = a + 1; b < classes.size(); ++b)
            CHECK(canonical_key(classes[a]) != canonical_key(classes[b]));
}

TEST_CASE("size guard raises capacity errors") {
    Budgets tight;
    tight.iso_component_cap = 4;
    CHECK_THROWS_AS(are_isomorphic(generate_family(S::cycle(5)), generate_family(S::cycle(5)),
                                   tight),
                    capacity_error);
    // Disconnected graphs with small components stay fine.
    CHECK(are_isomorphic(generate_family(S::matching(20)), generate_family(S::matching(20)),
                         tight));
}

TEST_CASE("minor containment on named instances") {
    auto k3 = generate_family(S::complete(3));
    auto k5 = generate_family(S::complete(5));
    auto k33 = generate_family(S::biclique(3, 3));
    CHECK(minor_contains(k3, generate_family(S::cycle(5))));
    CHECK_FALSE(minor_contains(k5, generate_family(S::grid(3))));
    CHECK_FALSE(minor_contains(k33, k5));
    CHECK(minor_contains(generate_family(S::path(2)), generate_family(S::star(40))));
    CHECK_FALSE(minor_contains(k5, generate_family(S::matching(40))));
    // Triangle plus a spare edge still has a K3 minor.
    CHECK(minor_contains(k3, generate_family(S::join({S::matching(1), S::complete(3)}))));

    // K3 + isolated vertex is not a minor of any cycle: the triangle's
    // branch sets must cover the whole ring, leaving no spare vertex.
    Graph k3_plus(4, {{0, 1}, {0, 2}, {1, 2}});
    CHECK_FALSE(minor_contains(k3_plus, generate_family(S::cycle(4))));
    CHECK_FALSE(minor_contains(k3_plus, generate_family(S::cycle(5))));
    CHECK(minor_contains(k3_plus, generate_family(S::complete(4))));
}

namespace {

// Model-based minor oracle: assign each host vertex to a pattern vertex or
// to none, require branch sets to be nonempty and connected, and demand a
// crossing host edge for every pattern edge. Independent of the library's
// delete/contract route.
bool minor_model_oracle(const Graph& p, const Graph& h) {
    const int np = p.vertex_count();
    const int nh = h.vertex_count();
    if (np == 0) return true;
    std::vector<int> owner(nh, -1);
    auto connected_branch = [&](int v) {
        std::vector<int> members;
        for (int w = 0; w < nh; ++w)
            if (owner[w] == v) members.push_back(w);
        if (members.empty()) return false;
        std::vector<char> seen(nh, 0);
        std::vector<int> queue{members[0]};
        seen[members[0]] = 1;
        size_t head = 0;
        int reached = 0;
        while (head < queue.size()) {
            int u = queue[head++];
            ++reached;
            for (int w = 0; w < nh; ++w)
                if (!seen[w] && owner[w] == v && h.has_edge(u, w)) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
        return reached == static_cast<int>(members.size());
    };
    std::function<bool(int)> assign = [&](int pos) -> bool {
        if (pos == nh) {
            for (int v = 0; v < np; ++v)
                if (!connected_branch(v)) return false;
            for (const auto& [u, v] : p.edges()) {
                bool crossed = false;
                for (const auto& [a, b] : h.edges())
                    if ((owner[a] == u && owner[b] == v) || (owner[a] == v && owner[b] == u))
                        crossed = true;
                if (!crossed) return false;
            }
            return true;
        }
        for (int v = -1; v < np; ++v) {
            owner[pos] = v;
            if (assign(pos + 1)) return true;
        }
        owner[pos] = -1;
        return false;
    };
    return assign(0);
}

}  // namespace

TEST_CASE("minor containment agrees with the branch-set oracle") {
    std::mt19937_64 rng(616);
    int agreements = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Graph pattern = oracles::random_graph(rng, 3 + static_cast<int>(rng() % 2), 0.55);
        Graph host = oracles::random_graph(rng, 4 + static_cast<int>(rng() % 3), 0.5);
        CHECK(minor_contains(pattern, host) == minor_model_oracle(pattern, host));
        ++agreements;
    }
    CHECK(agreements == 60);
}

TEST_CASE("minor containment properties") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = oracles::random_graph(rng, 4 + static_cast<int>(rng() % 3), 0.5);
        CHECK(minor_contains(g, g));
    }
    // Monotone under adding host edges.
    for (int trial = 0; trial < 10; ++trial) {
        Graph host = oracles::random_graph(rng, 6, 0.4);
        Graph pattern = oracles::random_graph(rng, 4, 0.5);
        bool before = minor_contains(pattern, host);
        // add one absent edge if any
        std::vector<std::pair<int, int>> edges = host.edges();
        bool added = false;
        for (int u = 0; u < 6 && !added; ++u)
            for (int v = u + 1; v < 6 && !added; ++v)
                if (!host.has_edge(u, v)) {
                    edges.emplace_back(u, v);
                    added = true;
                }
        if (!added) continue;
        Graph bigger(6, edges);
        if (before) CHECK(minor_contains(pattern, bigger));
    }
}
