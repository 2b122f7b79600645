#pragma once

#include <cstdint>
#include <string>

#include "edgesub/budgets.hpp"
#include "edgesub/graph.hpp"

namespace edgesub {

// Decides graph isomorphism deterministically. Both graphs are split into
// connected components first; the component cap in Budgets guards the
// per-component backtracking search.
bool are_isomorphic(const Graph& g1, const Graph& g2, const Budgets& budgets = {});

// Canonical encoding (lexicographically minimal adjacency string over all
// labellings, degree-class pruned). Equal strings <=> isomorphic graphs.
// Hard-capped by budgets.canonical_cap vertices.
std::string canonical_key(const Graph& g, const Budgets& budgets = {});

// Cheap isomorphism-invariant fingerprint for bucketing.
std::uint64_t invariant_hash(const Graph& g);

}  // namespace edgesub
