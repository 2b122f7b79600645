#pragma once

#include <optional>
#include <vector>

#include "edgesub/budgets.hpp"
#include "edgesub/coloured.hpp"
#include "edgesub/fracture.hpp"
#include "edgesub/graph.hpp"
#include "edgesub/ints.hpp"
#include "edgesub/property.hpp"

namespace edgesub {

// cells[i][j] = number of colour-preserving homomorphisms from the graph
// fractured by order[i] to the one fractured by order[j]. Upper triangular
// in the fixed linear extension with unit diagonal; construction verifies
// both and throws logic_error on violation.
struct MonotonicityMatrix {
    Graph h;
    std::vector<Fracture> order;
    std::vector<std::vector<Int>> cells;
};

MonotonicityMatrix build_monotonicity_matrix(const Graph& h, const Budgets& budgets = {});

// Back-substitution against the matrix recovers the weighted counts
// a(rho) * cpHom(fractured(rho) -> g) from colourful oracle queries on
// tensor products; cp_homs[i] is filled wherever the coefficient is
// nonzero ("coefficient zero, count unrecoverable" otherwise).
struct ExtractionResult {
    std::vector<Fracture> order;
    std::vector<Int> coefficients;             // a(rho)
    std::vector<Int> weighted;                 // a(rho) * cpHom(... -> g)
    std::vector<std::optional<Int>> cp_homs;   // cpHom where recoverable
};

ExtractionResult extract_cp_hom_counts(const Graph& h, const PropertySpec& phi,
                                       const HColouredGraph& g, const Budgets& budgets = {});

}  // namespace edgesub
