#include "edgesub/property.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <unordered_map>

#include "edgesub/errors.hpp"
#include "edgesub/ints.hpp"
#include "edgesub/family.hpp"
#include "edgesub/invariants.hpp"
#include "edgesub/isomorph.hpp"
#include "edgesub/minor.hpp"

namespace edgesub {

bool is_matching_graph(const Graph& g) {
    auto inv = graph_invariants(g);
    return inv.max_degree <= 1 && inv.isolated_vertex_count == 0;
}

bool is_star_graph(const Graph& g) {
    if (g.edge_count() < 1) return false;
    auto deg = g.degrees();
    for (int centre = 0; centre < g.vertex_count(); ++centre) {
        if (deg[centre] != g.edge_count()) continue;
        if (g.vertex_count() == g.edge_count() + 1) return true;
    }
    return false;
}

bool is_claw_free(const Graph& g) {
    auto adj = g.adjacency_lists();
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = adj[v];
        for (size_t a = 0; a < nb.size(); ++a)
            for (size_t b = a + 1; b < nb.size(); ++b)
                for (size_t c = b + 1; c < nb.size(); ++c)
                    if (!g.has_edge(nb[a], nb[b]) && !g.has_edge(nb[a], nb[c]) &&
                        !g.has_edge(nb[b], nb[c]))
                        return false;
    }
    return true;
}

bool is_eulerian_connected(const Graph& g) {
    if (!is_connected_graph(g)) return false;
    for (int d : g.degrees())
        if (d % 2) return false;
    return true;
}

bool is_eulerian_components(const Graph& g) {
    for (int d : g.degrees())
        if (d % 2) return false;
    return true;
}

bool is_hamiltonian(const Graph& g, const Budgets& budgets) {
    const int n = g.vertex_count();
    if (n < 3) return false;
    if (!is_connected_graph(g)) return false;
    auto deg = g.degrees();
    if (*std::min_element(deg.begin(), deg.end()) < 2) return false;
    if (n > budgets.hamiltonian_cap)
        throw capacity_error("hamiltonian: graph has " + std::to_string(n) +
                             " vertices, cap is " + std::to_string(budgets.hamiltonian_cap));
    auto bits = g.adjacency_bits();
    // dp[mask] = endpoints reachable from vertex 0 along paths spanning mask.
    std::vector<std::uint64_t> dp(std::size_t{1} << n, 0);
    dp[1] = 1;
    for (std::uint64_t mask = 1; mask < dp.size(); ++mask) {
        std::uint64_t ends = dp[mask];
        if (!ends) continue;
        for (int v = 0; v < n; ++v) {
            if (!((ends >> v) & 1)) continue;
            std::uint64_t next = bits[v] & ~mask;
            while (next) {
                int w = std::countr_zero(next);
                next &= next - 1;
                dp[mask | (std::uint64_t{1} << w)] |= std::uint64_t{1} << w;
            }
        }
    }
    std::uint64_t full = (std::size_t{1} << n) - 1;
    std::uint64_t ends = dp[full];
    return (ends & bits[0]) != 0;
}

namespace {

bool psi_property(const Graph& g) {
    const long m = g.edge_count();
    // Gate: is m of the form 3k^2 for a positive integer k?
    long k = 0;
    if (m > 0 && m % 3 == 0) {
        long root = std::lround(std::sqrt(static_cast<double>(m / 3)));
        for (long cand = std::max(root - 1, 1L); cand <= root + 1; ++cand)
            if (cand * cand == m / 3) k = cand;
    }
    // A matching of the right size always qualifies.
    if (is_matching_graph(g) && g.vertex_count() == 2 * m) return true;
    if (k == 0) return false;
    Budgets wide;
    wide.iso_component_cap = 64;
    Graph model = disjoint_union(generate_family(GraphFamilySpec::grid(k)),
                                 generate_family(GraphFamilySpec::star(k * k + 2 * k)));
    return are_isomorphic(g, model, wide);
}

Graph k5() { return generate_family(GraphFamilySpec::complete(5)); }
Graph k33() { return generate_family(GraphFamilySpec::biclique(3, 3)); }

PropertySpec make_spec(std::string name, std::function<bool(const Graph&)> pred) {
    PropertySpec spec;
    spec.name = std::move(name);
    spec.predicate = std::move(pred);
    return spec;
}

}  // namespace

PropertySpec make_minor_free_property(const std::string& name, std::vector<Graph> minors) {
    PropertySpec spec = make_spec(name, nullptr);
    spec.forbidden_minors = minors;
    bool matching_shaped = false, star_shaped = false;
    for (const auto& f : minors) {
        std::vector<int> all(f.edge_count());
        for (int i = 0; i < f.edge_count(); ++i) all[i] = i;
        Graph stripped = induced_by_edges(f, all);
        if (is_matching_graph(stripped) || stripped.vertex_count() == 0) matching_shaped = true;
        if (is_star_graph(stripped) || stripped.vertex_count() == 0) star_shaped = true;
    }
    // The criteria fail exactly when some forbidden minor embeds into large
    // matchings / stars.
    if (!matching_shaped) spec.matching_threshold = 1;
    if (!star_shaped) spec.star_threshold = 1;
    spec.predicate = [minors = std::move(minors)](const Graph& g) {
        for (const auto& f : minors)
            if (minor_contains(f, g)) return false;
        return true;
    };
    return spec;
}

const std::vector<std::string>& builtin_property_names() {
    static const std::vector<std::string> names = {
        "trivially-true", "trivially-false", "connected", "forest", "matching", "star",
        "eulerian", "eulerian-components", "hamiltonian", "claw-free", "bipartite", "planar",
        "2-regular", "psi",
    };
    return names;
}

PropertySpec builtin_property(const std::string& name) {
    if (name == "trivially-true") {
        auto spec = make_spec(name, [](const Graph&) { return true; });
        spec.matching_threshold = 1;
        spec.star_threshold = 1;
        return spec;
    }
    if (name == "trivially-false") {
        auto spec = make_spec(name, [](const Graph&) { return false; });
        spec.treewidth_bound = 0;
        return spec;
    }
    if (name == "connected") {
        auto spec = make_spec(name, is_connected_graph);
        spec.star_threshold = 1;
        return spec;
    }
    if (name == "forest") {
        auto spec = make_spec(name, is_forest_graph);
        spec.matching_threshold = 1;
        spec.star_threshold = 1;
        spec.treewidth_bound = 2;
        return spec;
    }
    if (name == "matching") {
        auto spec = make_spec(name, is_matching_graph);
        spec.matching_threshold = 1;
        spec.treewidth_bound = 2;
        return spec;
    }
    if (name == "star") {
        auto spec = make_spec(name, is_star_graph);
        spec.star_threshold = 1;
        spec.treewidth_bound = 2;
        return spec;
    }
    if (name == "eulerian") return make_spec(name, is_eulerian_connected);
    if (name == "eulerian-components") return make_spec(name, is_eulerian_components);
    if (name == "hamiltonian")
        return make_spec(name, [](const Graph& g) { return is_hamiltonian(g); });
    if (name == "claw-free") {
        auto spec = make_spec(name, is_claw_free);
        spec.matching_threshold = 1;
        return spec;
    }
    if (name == "bipartite") {
        auto spec = make_spec(name, is_bipartite_graph);
        spec.matching_threshold = 1;
        spec.star_threshold = 1;
        return spec;
    }
    if (name == "planar") {
        auto spec = make_minor_free_property(name, {k5(), k33()});
        return spec;
    }
    if (name == "2-regular") {
        auto spec = make_spec(name, [](const Graph& g) {
            if (g.vertex_count() == 0) return false;
            for (int d : g.degrees())
                if (d != 2) return false;
            return true;
        });
        spec.treewidth_bound = 3;
        return spec;
    }
    if (name == "psi") {
        auto spec = make_spec(name, psi_property);
        spec.matching_threshold = 1;
        return spec;
    }
    throw usage_error("unknown property: " + name);
}

bool evaluate(const PropertySpec& phi, const Graph& g, const Budgets&) {
    if (!phi.predicate) throw usage_error("property " + phi.name + " has no predicate");
    return phi.predicate(g);
}

namespace {

// Iso-class representatives of all k-edge graphs without isolated vertices.
const std::vector<Graph>& all_k_edge_classes(int k, const Budgets& budgets) {
    static std::mutex mutex;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    Graph base = generate_family(GraphFamilySpec::complete(std::max(2 * k, 1)));
    const int m = base.edge_count();
    std::unordered_map<std::uint64_t, std::vector<Graph>> buckets;

    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    bool done = k > m;
    while (!done) {
        Graph candidate = induced_by_edges(base, pick);
        auto& bucket = buckets[invariant_hash(candidate)];
        bool known = false;
        for (const auto& rep : bucket)
            if (are_isomorphic(rep, candidate, budgets)) {
                known = true;
                break;
            }
        if (!known) bucket.push_back(std::move(candidate));
        // next k-combination
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && pick[i] == m - k + i) --i;
        if (i < 0) {
            done = true;
        } else {
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    std::vector<std::pair<std::string, Graph>> keyed;
    for (auto& [hash, bucket] : buckets)
        for (auto& g : bucket) keyed.emplace_back(canonical_key(g, budgets), std::move(g));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.second.vertex_count() != b.second.vertex_count())
            return a.second.vertex_count() < b.second.vertex_count();
        return a.first < b.first;
    });
    std::vector<Graph> classes;
    classes.reserve(keyed.size());
    for (auto& [key, g] : keyed) classes.push_back(std::move(g));
    return cache.emplace(k, std::move(classes)).first->second;
}

}  // namespace

std::vector<Graph> enumerate_phi_k(const PropertySpec& phi, int k, const Budgets& budgets) {
    if (k < 0) throw usage_error("enumerate_phi_k: k must be >= 0");
    if (k > budgets.phi_k_cap) {
        Int examined = binomial(static_cast<long>(k) * (2 * k - 1), k);
        throw capacity_error("enumerate_phi_k: k = " + std::to_string(k) + " exceeds cap " +
                             std::to_string(budgets.phi_k_cap) + " (" + examined.str() +
                             " edge subsets to examine)");
    }
    std::vector<Graph> out;
    for (const auto& g : all_k_edge_classes(k, budgets))
        if (evaluate(phi, g, budgets)) out.push_back(g);
    return out;
}

int exact_treewidth(const Graph& g, const Budgets& budgets) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    if (n > budgets.treewidth_cap)
        throw capacity_error("exact_treewidth: graph has " + std::to_string(n) +
                             " vertices, cap is " + std::to_string(budgets.treewidth_cap));
    auto bits = g.adjacency_bits();

    // q(S, v): neighbours of the component of v in S + {v}, outside S + {v}.
    auto q_value = [&](std::uint32_t s, int v) {
        std::uint64_t inside = (static_cast<std::uint64_t>(s) | (std::uint64_t{1} << v));
        std::uint64_t reach = std::uint64_t{1} << v;
        for (;;) {
            std::uint64_t frontier = 0;
            std::uint64_t r = reach;
            while (r) {
                int u = std::countr_zero(r);
                r &= r - 1;
                frontier |= bits[u];
            }
            std::uint64_t grow = frontier & static_cast<std::uint64_t>(s) & ~reach;
            if (!grow) {
                return std::popcount(frontier & ~inside);
            }
            reach |= grow;
        }
    };

    std::vector<int> dp(std::size_t{1} << n, INT32_MAX);
    dp[0] = -1;
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
        for (int v = 0; v < n; ++v) {
            if (!((s >> v) & 1)) continue;
            std::uint32_t rest = s & ~(std::uint32_t{1} << v);
            if (dp[rest] == INT32_MAX) continue;
            int width = std::max(dp[rest], q_value(rest, v));
            dp[s] = std::min(dp[s], width);
        }
    }
    return std::max(dp[(std::size_t{1} << n) - 1], 0);
}

CriteriaProbe criteria_probe(const PropertySpec& phi, int bound, const Budgets& budgets) {
    if (bound < 1 || bound > budgets.probe_bound_cap)
        throw usage_error("criteria_probe: bound must be in [1, " +
                          std::to_string(budgets.probe_bound_cap) + "]");
    CriteriaProbe out;

    auto probe_family = [&](auto make, std::optional<int> declared) {
        std::vector<char> holds(bound + 1, 0);
        for (int j = 1; j <= bound; ++j) holds[j] = evaluate(phi, make(j), budgets);
        std::optional<int> from;
        if (holds[bound]) {
            int c = bound;
            while (c > 1 && holds[c - 1]) --c;
            from = c;
        }
        if (declared && *declared <= bound) {
            for (int j = std::max(*declared, 1); j <= bound; ++j)
                if (!holds[j])
                    throw metadata_error("property " + phi.name +
                                         ": declared criterion threshold " +
                                         std::to_string(*declared) + " fails at size " +
                                         std::to_string(j));
        }
        return from;
    };

    out.matching_holds_from = probe_family(
        [](int j) { return generate_family(GraphFamilySpec::matching(j)); },
        phi.matching_threshold);
    out.star_holds_from = probe_family(
        [](int j) { return generate_family(GraphFamilySpec::star(j)); }, phi.star_threshold);

    // Treewidth probe over the small iso-class catalogue.
    int tw_edges = std::min(4, budgets.phi_k_cap);
    std::optional<int> tw_max;
    for (int k = 1; k <= tw_edges; ++k) {
        for (const auto& g : all_k_edge_classes(k, budgets)) {
            if (!evaluate(phi, g, budgets)) continue;
            int tw = exact_treewidth(g, budgets);
            if (!tw_max || tw > *tw_max) tw_max = tw;
            if (phi.treewidth_bound && tw >= *phi.treewidth_bound)
                throw metadata_error("property " + phi.name + ": declared treewidth bound " +
                                     std::to_string(*phi.treewidth_bound) +
                                     " contradicted by a satisfying graph of treewidth " +
                                     std::to_string(tw));
        }
    }
    out.observed_tw_max = tw_max;
    return out;
}

}  // namespace edgesub
