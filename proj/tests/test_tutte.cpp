#include <doctest.h>

#include <numeric>
#include <random>

#include "edgesub/errors.hpp"
#include "edgesub/family.hpp"
#include "edgesub/tutte.hpp"
#include "oracles.hpp"

using namespace edgesub;
using S = GraphFamilySpec;

namespace {

Rat tutte_value(const Graph& g, int k, long xn, long xd, long yn, long yd) {
    return tutte_k_bruteforce(g, k, {Rat(xn, xd), Rat(yn, yd)}).value;
}

std::vector<int> all_edges(const Graph& g) {
    std::vector<int> ids(g.edge_count());
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
}

}  // namespace

TEST_CASE("component counts of subsets") {
    Graph k3 = generate_family(S::complete(3));
    CHECK(components_of_subset(k3, {}) == 3);
    CHECK(components_of_subset(k3, {0}) == 2);
    CHECK(components_of_subset(k3, all_edges(k3)) == 1);

    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracles::random_graph(rng, 5 + static_cast<int>(rng() % 3), 0.4);
        std::vector<int> subset;
        for (int e = 0; e < g.edge_count(); ++e)
            if (rng() % 2) subset.push_back(e);
        Graph stripped = induced_by_edges(g, subset);
        CHECK(components_of_subset(g, subset) ==
              stripped.component_count() + g.vertex_count() - stripped.vertex_count());
    }
}

TEST_CASE("brute-force values at pinned points") {
    Graph k3 = generate_family(S::complete(3));
    CHECK(tutte_value(k3, 2, 2, 1, 1, 1) == Rat(3));  // three 2-forests
    CHECK(tutte_value(k3, 1, 2, 1, 2, 1) == Rat(3));  // hyperbola closed form
    // closed form (x-1)^{-k(E)} (y-1)^{k+#V} C(#E, k) at (2,2)
    CHECK(tutte_value(k3, 1, 2, 1, 2, 1) == Rat(binomial(3, 1)));

    // k = 0 leaves the single empty-subset term (x-1)^(#V - k(E))
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = oracles::random_graph(rng, 5, 0.4);
        long exponent = g.vertex_count() - g.component_count();
        CHECK(tutte_value(g, 0, 3, 1, 7, 2) == rat_pow(Rat(2), exponent));
    }
}

TEST_CASE("deletion-contraction agrees with brute force") {
    std::mt19937_64 rng(53);
    const RationalPoint points[] = {
        {Rat(3), Rat(-2)}, {Rat(0), Rat(3)}, {Rat(-1, 2), Rat(5, 3)}, {Rat(2), Rat(2)},
    };
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = oracles::random_graph(rng, 4 + static_cast<int>(rng() % 4), 0.5);
        MultiGraph mg(g);
        for (int k = 0; k <= 4; ++k) {
            for (const auto& p : points) {
                auto fast = tutte_k_delcon(mg, k, p);
                CHECK(fast.provenance == TutteMethod::delcon);
                CHECK(fast.value == tutte_k_bruteforce(g, k, p).value);
            }
            // delegation at x = 1 and y = 1
            CHECK(tutte_k_delcon(mg, k, {Rat(1), Rat(4)}).value ==
                  tutte_k_bruteforce(g, k, {Rat(1), Rat(4)}).value);
            CHECK(tutte_k_delcon(mg, k, {Rat(5), Rat(1)}).value ==
                  tutte_k_bruteforce(g, k, {Rat(5), Rat(1)}).value);
        }
    }
}

TEST_CASE("loops and parallel edges in the recursion") {
    // Two vertices, a doubled edge: contraction makes a loop that must keep
    // counting toward the subset size.
    MultiGraph doubled(2, {{0, 0, 1}, {1, 0, 1}});
    const RationalPoint p{Rat(3), Rat(4)};
    for (int k = 0; k <= 2; ++k)
        CHECK(tutte_k_delcon(doubled, k, p).value ==
              modified_tutte_k_bruteforce(doubled, k, p) /
                  (rat_pow(Rat(2), doubled.component_count()) *
                   rat_pow(Rat(3), doubled.vertex_count())));

    // A graph that is a single loop.
    MultiGraph loop(1, {{0, 0, 0}});
    CHECK(tutte_k_delcon(loop, 1, p).value ==
          modified_tutte_k_bruteforce(loop, 1, p) / (rat_pow(Rat(2), 1) * rat_pow(Rat(3), 1)));
}

TEST_CASE("classical recurrence via summation over k") {
    std::mt19937_64 rng(54);
    const RationalPoint p{Rat(3), Rat(-2)};
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = oracles::random_graph(rng, 5, 0.5);
        Rat total = 0;
        for (int k = 0; k <= g.edge_count(); ++k) total += tutte_k_bruteforce(g, k, p).value;
        CHECK(total == classical_tutte(g, p));

        MultiGraph mg(g);
        Rat modified_total = 0;
        for (int k = 0; k <= g.edge_count(); ++k)
            modified_total += modified_tutte_k_bruteforce(mg, k, p);
        CHECK(modified_total == classical_modified_tutte(mg, p));
    }
}

TEST_CASE("aggregation identity") {
    Graph k3 = generate_family(S::complete(3));
    CHECK(aggregation_identity_check(k3, 0, {Rat(5), Rat(7)}));
    CHECK(aggregation_identity_check(k3, 2, {Rat(0), Rat(3)}));

    std::mt19937_64 rng(55);
    int checks = 0;
    while (checks < 100) {
        Graph g = oracles::random_graph(rng, 4 + static_cast<int>(rng() % 4), 0.5);
        RationalPoint p{Rat(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)),
                        Rat(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3))};
        for (int k = 0; k <= 3; ++k) {
            CHECK(aggregation_identity_check(g, k, p));
            ++checks;
        }
    }
}

TEST_CASE("special point counters against direct enumeration") {
    Graph k3 = generate_family(S::complete(3));
    auto counts = special_point_counters(k3, 2, 2);
    CHECK(counts.k_forests == 3);
    CHECK(counts.even_component_subsets == 0);

    auto counts3 = special_point_counters(k3, 3, 3);
    CHECK(counts3.acyclic_orientation_pairs == 6);

    std::mt19937_64 rng(56);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = oracles::random_graph(rng, 4 + static_cast<int>(rng() % 4), 0.5);
        const int m = g.edge_count();
        for (int k = 0; k <= std::min(4, m); ++k) {
            auto got = special_point_counters(g, k, 2);

            Int forests = 0, colour_pairs = 0, orient_pairs = 0, even_comp = 0, even_betti = 0;
            std::vector<int> pick(k);
            std::iota(pick.begin(), pick.end(), 0);
            for (;;) {
                Graph stripped = induced_by_edges(g, pick);
                long ka = components_of_subset(g, pick);
                if (stripped.edge_count() ==
                    stripped.vertex_count() - stripped.component_count())
                    ++forests;
                colour_pairs += oracles::colourings_naive(g, pick, 2);
                orient_pairs += oracles::acyclic_orientations_naive(g, pick);
                if (ka % 2 == 0) ++even_comp;
                long betti = ka + k - g.vertex_count();
                if (betti % 2 == 0) ++even_betti;
                if (k == 0) break;
                int i = k - 1;
                while (i >= 0 && pick[i] == m - k + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
            }
            CHECK(got.k_forests == forests);
            REQUIRE(got.chromatic_pairs.has_value());
            CHECK(*got.chromatic_pairs == colour_pairs);
            CHECK(got.acyclic_orientation_pairs == orient_pairs);
            CHECK(got.even_component_subsets == even_comp);
            CHECK(got.even_betti_subsets == even_betti);
        }
    }
}

TEST_CASE("the x = 1 line") {
    Graph big = generate_family(S::matching(50));
    CHECK(tutte_x1_line(big, 3, Rat(5)).value == 0);
    CHECK(tutte_x1_line(big, 3, Rat(5)).provenance == TutteMethod::closed_form);

    Graph k3 = generate_family(S::complete(3));
    CHECK(tutte_x1_line(k3, 2, Rat(4)).value == 3);
    CHECK(tutte_x1_line(k3, 2, Rat(4)).value == tutte_value(k3, 2, 1, 1, 4, 1));

    // k = 0 on a connected multi-vertex graph vanishes
    CHECK(tutte_x1_line(generate_family(S::path(3)), 0, Rat(2)).value == 0);
    Graph single(1, {});
    CHECK(tutte_x1_line(single, 0, Rat(2)).value == 1);
}

TEST_CASE("factorization through the reduced variant") {
    std::mt19937_64 rng(57);
    const RationalPoint p{Rat(3), Rat(-1)};
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracles::random_graph(rng, 5, 0.45);
        for (int k = 0; k <= 3; ++k) {
            Rat hat = hat_tutte_k_bruteforce(g, k, p);
            long exponent = g.vertex_count() - g.component_count();
            CHECK(tutte_k_bruteforce(g, k, p).value == rat_pow(p.x - 1, exponent) * hat);
        }
    }
    CHECK_THROWS_AS(hat_tutte_k_bruteforce(generate_family(S::complete(3)), 1, {Rat(1), Rat(2)}),
                    usage_error);
}

TEST_CASE("point classification") {
    auto hyperbola = classify_point({Rat(2), Rat(2)});
    CHECK(hyperbola.exact.tag == ComplexityTag::polynomial);
    CHECK(hyperbola.approx.tag == ComplexityTag::fpras);

    auto x1 = classify_point({Rat(1), Rat(3)});
    CHECK(x1.exact.tag == ComplexityTag::sharp_p_hard_fpt);
    CHECK(x1.approx.tag == ComplexityTag::fptras);

    auto forests = classify_point({Rat(2), Rat(1)});
    CHECK(forests.exact.tag == ComplexityTag::sharp_w1_hard);
    CHECK(forests.approx.tag == ComplexityTag::fpras);

    auto origin = classify_point({Rat(0), Rat(0)});
    CHECK(origin.exact.tag == ComplexityTag::polynomial);  // (0-1)(0-1) = 1

    auto outside = classify_point({Rat(3), Rat(2)});
    CHECK(outside.exact.tag == ComplexityTag::sharp_w1_hard);
    CHECK(outside.approx.tag == ComplexityTag::open);

    auto both_one = classify_point({Rat(1), Rat(1)});
    CHECK(both_one.exact.tag == ComplexityTag::polynomial);
    CHECK(both_one.approx.tag == ComplexityTag::fpras);
}
