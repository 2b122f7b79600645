#include <doctest.h>

#include <random>

#include "edgesub/errors.hpp"
#include "edgesub/family.hpp"
#include "edgesub/invariants.hpp"
#include "edgesub/isomorph.hpp"
#include "edgesub/minor.hpp"
#include "edgesub/property.hpp"
#include "oracles.hpp"

using namespace edgesub;
using S = GraphFamilySpec;

TEST_CASE("builtin predicates on named graphs") {
    for (long l : {3L, 4L, 5L})
        CHECK(evaluate(builtin_property("eulerian"), generate_family(S::torus(l))));
    CHECK_FALSE(evaluate(builtin_property("eulerian"), generate_family(S::matching(3))));
    CHECK(evaluate(builtin_property("eulerian-components"),
                   generate_family(S::scaled(2, S::cycle(3)))));
    CHECK_FALSE(evaluate(builtin_property("eulerian"),
                         generate_family(S::scaled(2, S::cycle(3)))));

    CHECK(evaluate(builtin_property("psi"), generate_family(S::matching(12))));
    CHECK_FALSE(evaluate(builtin_property("psi"), generate_family(S::star(12))));
    CHECK(evaluate(builtin_property("psi"),
                   generate_family(S::join({S::grid(2), S::star(8)}))));
    CHECK(evaluate(builtin_property("psi"), generate_family(S::matching(5))));
    CHECK_FALSE(evaluate(builtin_property("psi"), generate_family(S::path(5))));

    CHECK_FALSE(evaluate(builtin_property("claw-free"), generate_family(S::star(3))));
    CHECK(evaluate(builtin_property("claw-free"), generate_family(S::complete(5))));

    CHECK(evaluate(builtin_property("hamiltonian"), generate_family(S::cycle(5))));
    CHECK_FALSE(evaluate(builtin_property("hamiltonian"), generate_family(S::path(4))));

    CHECK(evaluate(builtin_property("planar"), generate_family(S::grid(3))));
    CHECK_FALSE(evaluate(builtin_property("planar"), generate_family(S::complete(5))));
    CHECK_FALSE(evaluate(builtin_property("planar"), generate_family(S::biclique(3, 3))));

    CHECK(evaluate(builtin_property("2-regular"), generate_family(S::cycle(4))));
    CHECK_FALSE(evaluate(builtin_property("2-regular"), generate_family(S::path(3))));

    CHECK_THROWS_AS(builtin_property("no-such-property"), usage_error);
}

TEST_CASE("predicate implications on random graphs") {
    std::mt19937_64 rng(21);
    PropertySpec eulerian = builtin_property("eulerian");
    PropertySpec hamiltonian = builtin_property("hamiltonian");
    PropertySpec connected = builtin_property("connected");
    PropertySpec forest = builtin_property("forest");
    PropertySpec bipartite = builtin_property("bipartite");
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = oracles::random_graph(rng, 4 + static_cast<int>(rng() % 4), 0.5);
        if (evaluate(eulerian, g))
            for (int d : g.degrees()) CHECK(d % 2 == 0);
        if (evaluate(hamiltonian, g)) CHECK(evaluate(connected, g));
        if (evaluate(forest, g)) CHECK(evaluate(bipartite, g));
    }
}

TEST_CASE("minor-free properties agree with direct minor tests") {
    std::mt19937_64 rng(22);
    std::vector<Graph> minors = {generate_family(S::complete(3)), generate_family(S::star(3))};
    PropertySpec phi = make_minor_free_property("custom", minors);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracles::random_graph(rng, 5, 0.5);
        bool direct = !minor_contains(minors[0], g) && !minor_contains(minors[1], g);
        CHECK(evaluate(phi, g) == direct);
    }
}

TEST_CASE("phi_k enumeration") {
    auto matching3 = enumerate_phi_k(builtin_property("matching"), 3);
    REQUIRE(matching3.size() == 1);
    CHECK(are_isomorphic(matching3[0], generate_family(S::matching(3))));

    auto forest2 = enumerate_phi_k(builtin_property("forest"), 2);
    CHECK(forest2.size() == 2);

    auto connected3 = enumerate_phi_k(builtin_property("connected"), 3);
    REQUIRE(connected3.size() == 3);
    bool has_path = false, has_triangle = false, has_star = false;
    for (const auto& g : connected3) {
        if (are_isomorphic(g, generate_family(S::path(3)))) has_path = true;
        if (are_isomorphic(g, generate_family(S::complete(3)))) has_triangle = true;
        if (are_isomorphic(g, generate_family(S::star(3)))) has_star = true;
    }
    CHECK(has_path);
    CHECK(has_triangle);
    CHECK(has_star);

    CHECK(enumerate_phi_k(builtin_property("trivially-true"), 2).size() == 2);
    auto all3 = enumerate_phi_k(builtin_property("trivially-true"), 3);
    CHECK(all3.size() == 5);
    auto all4 = enumerate_phi_k(builtin_property("trivially-true"), 4);
    CHECK(all4.size() == 11);
    for (const auto& g : all4) {
        CHECK(g.edge_count() == 4);
        CHECK(g.vertex_count() <= 8);
        CHECK(graph_invariants(g).isolated_vertex_count == 0);
    }
    CHECK(enumerate_phi_k(builtin_property("trivially-false"), 3).empty());

    Budgets tight;
    tight.phi_k_cap = 3;
    CHECK_THROWS_AS(enumerate_phi_k(builtin_property("forest"), 4, tight), capacity_error);
}

TEST_CASE("exact treewidth matches the elimination-order oracle") {
    CHECK(exact_treewidth(generate_family(S::complete(5))) == 4);
    CHECK(exact_treewidth(generate_family(S::cycle(5))) == 2);
    CHECK(exact_treewidth(generate_family(S::star(4))) == 1);
    CHECK(exact_treewidth(generate_family(S::matching(3))) == 1);
    CHECK(exact_treewidth(generate_family(S::grid(3))) == 3);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracles::random_graph(rng, 4 + static_cast<int>(rng() % 3), 0.5);
        CHECK(exact_treewidth(g) == oracles::treewidth_naive(g));
    }
}

TEST_CASE("criteria probe") {
    auto planar = criteria_probe(builtin_property("planar"), 12);
    CHECK(planar.matching_holds_from == 1);
    CHECK(planar.star_holds_from == 1);

    auto regular = criteria_probe(builtin_property("2-regular"), 12);
    CHECK_FALSE(regular.matching_holds_from.has_value());
    CHECK_FALSE(regular.star_holds_from.has_value());
    CHECK(regular.observed_tw_max == 2);

    auto psi = criteria_probe(builtin_property("psi"), 14);
    CHECK(psi.matching_holds_from == 1);
    CHECK_FALSE(psi.star_holds_from.has_value());

    // probes run at the full default bound as well
    auto bipartite = criteria_probe(builtin_property("bipartite"), 50);
    CHECK(bipartite.matching_holds_from == 1);
    CHECK(bipartite.star_holds_from == 1);

    // declared metadata contradicted by probing
    PropertySpec broken = builtin_property("connected");
    broken.matching_threshold = 1;  // false: matchings of size >= 2 are disconnected
    CHECK_THROWS_AS(criteria_probe(broken, 10), metadata_error);

    PropertySpec bad_tw = builtin_property("connected");
    bad_tw.treewidth_bound = 1;  // false: the triangle is connected with treewidth 2
    CHECK_THROWS_AS(criteria_probe(bad_tw, 10), metadata_error);

    CHECK_THROWS_AS(criteria_probe(builtin_property("planar"), 99), usage_error);
}
