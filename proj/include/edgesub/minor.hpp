#pragma once

#include "edgesub/budgets.hpp"
#include "edgesub/graph.hpp"

namespace edgesub {

// True iff `pattern` is a minor of `host` (edge/vertex deletions and edge
// contractions). Structural pruning and component matching run first; the
// remaining connected cores go through recursive delete/contract with
// memoization on canonical forms, guarded by budgets.minor_host_cap.
bool minor_contains(const Graph& pattern, const Graph& host, const Budgets& budgets = {});

}  // namespace edgesub
