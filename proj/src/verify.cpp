#include "edgesub/verify.hpp"

#include <random>
#include <sstream>

#include "edgesub/coefficient.hpp"
#include "edgesub/counting.hpp"
#include "edgesub/errors.hpp"
#include "edgesub/family.hpp"
#include "edgesub/fractured.hpp"
#include "edgesub/homcount.hpp"
#include "edgesub/isomorph.hpp"
#include "edgesub/torus.hpp"
#include "edgesub/tutte.hpp"

namespace edgesub {

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::uniform_real_distribution<>(0, 1)(rng) < p) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

// Random H-coloured graph: uniform colours, then each colour-compatible
// pair becomes an edge with probability p.
HColouredGraph random_coloured(std::mt19937_64& rng, const Graph& h, int n, double p) {
    std::vector<int> colour(n);
    for (int v = 0; v < n; ++v)
        colour[v] = static_cast<int>(rng() % static_cast<std::uint64_t>(h.vertex_count()));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (h.has_edge(colour[u], colour[v]) &&
                std::uniform_real_distribution<>(0, 1)(rng) < p)
                edges.emplace_back(u, v);
    return HColouredGraph(Graph(n, std::move(edges)), h, std::move(colour));
}

std::vector<CheckResult> fixed_point_suite(long ell) {
    std::vector<CheckResult> out;
    Budgets wide;
    wide.iso_component_cap = static_cast<int>(ell * ell + 1);

    auto points = torus_fixed_points(ell);
    out.push_back({"fixed-point count is 15", points.size() == 15,
                   "found " + std::to_string(points.size())});

    const std::pair<TorusFixedPointType, int> expected[] = {
        {TorusFixedPointType::matching, 1},
        {TorusFixedPointType::matching_and_cycles, 2},
        {TorusFixedPointType::wedge_packing, 4},
        {TorusFixedPointType::cycle_packing_i, 1},
        {TorusFixedPointType::cycle_packing_ii, 2},
        {TorusFixedPointType::sun_packing, 4},
        {TorusFixedPointType::torus, 1},
    };
    for (const auto& [type, count] : expected) {
        int seen = 0;
        for (const auto& [f, t] : points)
            if (t == type) ++seen;
        out.push_back({"multiplicity of " + to_string(type) + " is " + std::to_string(count),
                       seen == count, "found " + std::to_string(seen)});
    }

    TorusGeometry geo = TorusGeometry::make(ell);
    bool shift_fixed = true;
    bool types_match = true;
    std::string detail;
    for (const auto& [f, type] : points) {
        if (torus_shift_act(geo, 1, 0, f) != f || torus_shift_act(geo, 2, ell - 1, f) != f)
            shift_fixed = false;
        Graph induced = fractured_graph(geo.graph, f).graph;
        if (!are_isomorphic(induced, torus_fixed_point_model(type, ell), wide)) {
            types_match = false;
            detail = "mismatch for " + to_string(type);
        }
    }
    out.push_back({"uniform fractures are shift-invariant", shift_fixed, ""});
    out.push_back({"induced graphs match the seven types", types_match, detail});
    return out;
}

std::vector<CheckResult> basis_identity_suite() {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(20240817);
    const char* props[] = {"connected", "forest", "matching"};
    std::vector<Graph> hs = {generate_family(GraphFamilySpec::path(2)),
                             generate_family(GraphFamilySpec::complete(3))};
    for (const auto& h : hs) {
        auto table_ok = true;
        for (const char* name : props) {
            PropertySpec phi = builtin_property(name);
            CoefficientTable table = coefficient_table(phi, h);
            std::vector<HColouredGraph> frag;
            for (const auto& f : table.order) frag.push_back(to_coloured(fractured_graph(h, f), h));
            for (int trial = 0; trial < 5; ++trial) {
                HColouredGraph g = random_coloured(rng, h, 7, 0.55);
                Int direct = count_colourful(phi, h, g);
                Int combo = 0;
                for (size_t i = 0; i < table.order.size(); ++i)
                    combo += table.values[i] * count_cp_homs(frag[i], g);
                if (direct != combo) table_ok = false;
            }
        }
        std::ostringstream name;
        name << "colourful count equals weighted cpHom sum (base " << h.vertex_count()
             << " vertices, " << h.edge_count() << " edges)";
        out.push_back({name.str(), table_ok, ""});
    }
    return out;
}

std::vector<CheckResult> tutte_identity_suite() {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(77001);
    const RationalPoint p1{Rat(3), Rat(-2)};
    const RationalPoint p2{Rat(0), Rat(3)};

    bool delcon_ok = true, aggregation_ok = true, sum_ok = true;
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = random_graph(rng, 5 + static_cast<int>(rng() % 2), 0.5);
        MultiGraph mg(g);
        for (int k = 0; k <= 3; ++k) {
            if (tutte_k_delcon(mg, k, p1).value != tutte_k_bruteforce(g, k, p1).value)
                delcon_ok = false;
            if (!aggregation_identity_check(g, k, p2)) aggregation_ok = false;
        }
        Rat total = 0;
        for (int k = 0; k <= g.edge_count(); ++k) total += tutte_k_bruteforce(g, k, p1).value;
        if (total != classical_tutte(g, p1)) sum_ok = false;
    }
    out.push_back({"deletion-contraction equals brute force", delcon_ok, ""});
    out.push_back({"aggregation identity holds", aggregation_ok, ""});
    out.push_back({"values sum to the classical polynomial", sum_ok, ""});
    return out;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"fixed-points", "basis-identity", "tutte-identities", "all"};
}

std::vector<CheckResult> run_verify_suite(const std::string& name, const SuiteOptions& opts) {
    if (name == "fixed-points") return fixed_point_suite(opts.ell);
    if (name == "basis-identity") return basis_identity_suite();
    if (name == "tutte-identities") return tutte_identity_suite();
    if (name == "all") {
        auto out = fixed_point_suite(opts.ell);
        auto b = basis_identity_suite();
        auto t = tutte_identity_suite();
        out.insert(out.end(), b.begin(), b.end());
        out.insert(out.end(), t.begin(), t.end());
        return out;
    }
    throw usage_error("unknown verify suite: " + name);
}

}  // namespace edgesub
