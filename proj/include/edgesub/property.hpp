#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "edgesub/budgets.hpp"
#include "edgesub/graph.hpp"

namespace edgesub {

// A decidable graph property with declared metadata. Predicates are total
// on graphs within the per-property size guards and must not assume
// connectivity: callers evaluate them on fractured graphs and on stripped
// subgraphs, which are never connected in general.
struct PropertySpec {
    std::string name;
    std::function<bool(const Graph&)> predicate;

    // Phi(M_k) = 1 for all k >= matching_threshold (when set).
    std::optional<int> matching_threshold;
    // Phi(K_{1,k}) = 1 for all k >= star_threshold (when set).
    std::optional<int> star_threshold;
    // Phi is false on every graph of treewidth >= treewidth_bound (when set).
    std::optional<int> treewidth_bound;
    // Present iff the property is minor-closed with these forbidden minors.
    std::optional<std::vector<Graph>> forbidden_minors;
};

// Builtins: trivially-true, trivially-false, connected, forest, matching,
// star, eulerian (connected + even degrees), eulerian-components (every
// component eulerian), hamiltonian, claw-free, bipartite, planar, 2-regular,
// psi (grid-plus-star-or-matching with the 3k^2 edge-count gate).
const std::vector<std::string>& builtin_property_names();
PropertySpec builtin_property(const std::string& name);

// Minor-closed property from a forbidden-minor list.
PropertySpec make_minor_free_property(const std::string& name, std::vector<Graph> minors);

bool evaluate(const PropertySpec& phi, const Graph& g, const Budgets& budgets = {});

// Isomorphism-class representatives of the k-edge graphs without isolated
// vertices satisfying phi, in a deterministic order.
std::vector<Graph> enumerate_phi_k(const PropertySpec& phi, int k, const Budgets& budgets = {});

struct CriteriaProbe {
    // Smallest c <= bound with Phi(M_j) = 1 for all j in [c, bound]
    // (nullopt when Phi(M_bound) = 0), and likewise for stars.
    std::optional<int> matching_holds_from;
    std::optional<int> star_holds_from;
    // Max exact treewidth over the probed graphs satisfying phi.
    std::optional<int> observed_tw_max;
};

// Empirical criteria check up to `bound`; declared metadata is verified
// against the probes and a contradiction raises metadata_error.
CriteriaProbe criteria_probe(const PropertySpec& phi, int bound, const Budgets& budgets = {});

// Exact treewidth via elimination-order subset DP (vertex cap in budgets).
int exact_treewidth(const Graph& g, const Budgets& budgets = {});

// Shared predicate helpers.
bool is_matching_graph(const Graph& g);
bool is_star_graph(const Graph& g);
bool is_claw_free(const Graph& g);
bool is_eulerian_connected(const Graph& g);
bool is_eulerian_components(const Graph& g);
bool is_hamiltonian(const Graph& g, const Budgets& budgets = {});

}  // namespace edgesub
