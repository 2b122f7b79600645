#pragma once

#include <cstdint>
#include <vector>

#include "edgesub/budgets.hpp"
#include "edgesub/coloured.hpp"
#include "edgesub/graph.hpp"
#include "edgesub/ints.hpp"
#include "edgesub/property.hpp"

namespace edgesub {

// A counting request against a named builtin property.
struct CountQuery {
    std::string property;
    int k = 1;
    Graph host;
    enum class Mode { brute, via_subs } mode = Mode::brute;
};

Int run_count_query(const CountQuery& q, const Budgets& budgets = {});

// Reference oracle: enumerate all k-subsets A of E(g) and test phi(g[A])
// with isolated vertices stripped.
Int count_exact_bruteforce(const PropertySpec& phi, int k, const Graph& g,
                           const Budgets& budgets = {});

// Decomposition over the iso-classes in Phi_k: sum of count_subs(H, g).
Int count_exact_via_subs(const PropertySpec& phi, int k, const Graph& g,
                         const Budgets& budgets = {});

// Colourful count: edge subsets of g containing each H-edge colour exactly
// once whose stripped subgraph satisfies phi.
Int count_colourful(const PropertySpec& phi, const Graph& h, const HColouredGraph& g,
                    const Budgets& budgets = {});

// Exactly uniform k-subset of {0,...,m-1} via partial Fisher-Yates;
// reproducible per seed, ascending order.
std::vector<int> uniform_k_subset(long m, int k, std::uint64_t seed);

// Erdos-Szekeres stand-in for the diagonal Ramsey number: r(k) = C(2k-2,k-1).
long ramsey_upper_bound(int k);

// Sample count of the sampling branch: ceil(C(r(k),k) * 3 ln(2/delta) / eps^2).
Int fptras_sample_count(int k, double eps, double delta);

struct EstimateResult {
    Rat estimate;      // exact rational (X/t) * C(m,k), or the exact count
    double eps = 0;
    double delta = 0;
    Int samples;       // t on the sampling path, 0 on the exact path
    std::uint64_t seed = 0;
    bool exact_path = false;
};

// Monte-Carlo scheme for properties declaring both the matching and the
// star criterion: exact brute force when k is below the declared constant
// or the host has at most r(k) edges, otherwise t seeded uniform samples.
EstimateResult fptras_estimate(const PropertySpec& phi, int k, const Graph& g, double eps,
                               double delta, std::uint64_t seed, const Budgets& budgets = {});

// Bounded-treewidth route: per-term approximation of count_subs with
// failure budget delta/|Phi_k| per term, aggregated. The backend is the
// exact subgraph counter at desk scale, so the estimate is exact while the
// accounting mirrors the randomized scheme.
EstimateResult fptras_via_subs(const PropertySpec& phi, int k, const Graph& g, double eps,
                               double delta, std::uint64_t seed, const Budgets& budgets = {});

enum class DecisionPath { matching_win, star_win, generate_and_test };

struct DecisionResult {
    bool exists = false;
    DecisionPath path = DecisionPath::generate_and_test;
};

// Win-Win decision: a large matching or a high-degree vertex certifies a
// solution directly when the respective criterion threshold is declared and
// k is past it; otherwise explicit generate-and-test over Phi_k via
// subgraph-embedding search. Requires at least one declared criterion or a
// treewidth bound.
DecisionResult decide_exists_explain(const PropertySpec& phi, int k, const Graph& g,
                                     const Budgets& budgets = {});
bool decide_exists(const PropertySpec& phi, int k, const Graph& g, const Budgets& budgets = {});

}  // namespace edgesub
