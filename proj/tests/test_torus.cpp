#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "edgesub/errors.hpp"
#include "edgesub/family.hpp"
#include "edgesub/fracture.hpp"
#include "edgesub/fractured.hpp"
#include "edgesub/isomorph.hpp"
#include "edgesub/torus.hpp"

using namespace edgesub;
using S = GraphFamilySpec;

namespace {

Budgets wide_iso(long ell) {
    Budgets b;
    // Fractured torus graphs have up to 4*ell^2 vertices.
    b.iso_component_cap = static_cast<int>(4 * ell * ell + 1);
    return b;
}

Fracture random_fracture(std::mt19937_64& rng, const Graph& h) {
    Fracture f;
    f.blocks.resize(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v) {
        auto inc = h.incident_edges(v);
        std::map<int, std::vector<int>> groups;
        int next = 0;
        std::vector<int> label(inc.size());
        for (size_t i = 0; i < inc.size(); ++i) {
            label[i] = static_cast<int>(rng() % static_cast<std::uint64_t>(next + 1));
            if (label[i] == next) ++next;
            groups[label[i]].push_back(inc[i]);
        }
        for (auto& [lab, block] : groups) f.blocks[v].push_back(block);
        std::sort(f.blocks[v].begin(), f.blocks[v].end());
    }
    return f;
}

}  // namespace

TEST_CASE("shift action basics") {
    TorusGeometry geo = TorusGeometry::make(3);
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        Fracture f = random_fracture(rng, geo.graph);
        CHECK(torus_shift_act(geo, 0, 0, f) == f);
        // group law: acting twice equals acting by the sum
        Fracture once = torus_shift_act(geo, 1, 2, torus_shift_act(geo, 2, 1, f));
        CHECK(once == torus_shift_act(geo, 0, 0, f));
        // fractured graphs in an orbit are isomorphic
        Fracture moved = torus_shift_act(geo, 1, 1, f);
        CHECK(are_isomorphic(fractured_graph(geo.graph, f).graph,
                             fractured_graph(geo.graph, moved).graph, wide_iso(3)));
    }
    CHECK_THROWS_AS(torus_shift_act(geo, 1, 0, bottom_fracture(generate_family(S::complete(3)))),
                    usage_error);
}

TEST_CASE("uniform fractures are exactly the fixed points") {
    TorusGeometry geo = TorusGeometry::make(3);
    auto fixed = torus_fixed_points(3);
    std::set<Fracture> fixed_set;
    for (const auto& [f, type] : fixed) {
        fixed_set.insert(f);
        for (long di = 0; di < 3; ++di)
            for (long dj = 0; dj < 3; ++dj) CHECK(torus_shift_act(geo, di, dj, f) == f);
    }
    CHECK(fixed_set.size() == 15);

    // A non-uniform fracture moves under some shift, and its orbit size
    // divides 9 and exceeds 1.
    std::mt19937_64 rng(5150);
    int checked = 0;
    while (checked < 8) {
        Fracture f = random_fracture(rng, geo.graph);
        if (fixed_set.count(f)) continue;
        std::set<Fracture> orbit;
        for (long di = 0; di < 3; ++di)
            for (long dj = 0; dj < 3; ++dj) orbit.insert(torus_shift_act(geo, di, dj, f));
        CHECK(orbit.size() > 1);
        CHECK(9 % orbit.size() == 0);
        ++checked;
    }
}

TEST_CASE("fixed point types at ell = 3") {
    auto fixed = torus_fixed_points(3);
    TorusGeometry geo = TorusGeometry::make(3);
    std::map<TorusFixedPointType, int> mult;
    for (const auto& [f, type] : fixed) {
        ++mult[type];
        CHECK(are_isomorphic(fractured_graph(geo.graph, f).graph,
                             torus_fixed_point_model(type, 3), wide_iso(3)));
    }
    CHECK(mult[TorusFixedPointType::matching] == 1);
    CHECK(mult[TorusFixedPointType::matching_and_cycles] == 2);
    CHECK(mult[TorusFixedPointType::wedge_packing] == 4);
    CHECK(mult[TorusFixedPointType::cycle_packing_i] == 1);
    CHECK(mult[TorusFixedPointType::cycle_packing_ii] == 2);
    CHECK(mult[TorusFixedPointType::sun_packing] == 4);
    CHECK(mult[TorusFixedPointType::torus] == 1);

    // Wedge packings induce 9 disjoint paths of two edges; exactly one
    // fixed point induces the torus itself.
    Graph nine_wedges = generate_family(S::scaled(9, S::path(2)));
    int wedge_count = 0, torus_count = 0;
    for (const auto& [f, type] : fixed) {
        Graph induced = fractured_graph(geo.graph, f).graph;
        if (are_isomorphic(induced, nine_wedges, wide_iso(3))) ++wedge_count;
        if (are_isomorphic(induced, geo.graph, wide_iso(3))) {
            ++torus_count;
            CHECK(f == top_fracture(geo.graph));
        }
    }
    CHECK(wedge_count == 4);
    CHECK(torus_count == 1);
}

TEST_CASE("cycle packing II induces long cycles at ell = 5") {
    auto fixed = torus_fixed_points(5);
    Graph model = generate_family(S::scaled(5, S::cycle(10)));
    TorusGeometry geo = TorusGeometry::make(5);
    int found = 0;
    for (const auto& [f, type] : fixed) {
        if (type != TorusFixedPointType::cycle_packing_ii) continue;
        CHECK(are_isomorphic(fractured_graph(geo.graph, f).graph, model, wide_iso(5)));
        ++found;
    }
    CHECK(found == 2);
}
