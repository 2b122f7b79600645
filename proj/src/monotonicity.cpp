#include "edgesub/monotonicity.hpp"

#include <stdexcept>

#include "edgesub/coefficient.hpp"
#include "edgesub/counting.hpp"
#include "edgesub/errors.hpp"
#include "edgesub/fractured.hpp"
#include "edgesub/homcount.hpp"

namespace edgesub {

MonotonicityMatrix build_monotonicity_matrix(const Graph& h, const Budgets& budgets) {
    MonotonicityMatrix out;
    out.h = h;
    out.order = enumerate_fractures(h, budgets);
    const size_t n = out.order.size();

    std::vector<HColouredGraph> coloured;
    coloured.reserve(n);
    for (const auto& f : out.order) coloured.push_back(to_coloured(fractured_graph(h, f), h));

    out.cells.assign(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out.cells[i][j] = count_cp_homs(coloured[i], coloured[j]);

    for (size_t i = 0; i < n; ++i) {
        if (out.cells[i][i] != 1)
            throw std::logic_error("monotonicity matrix: diagonal entry is not 1");
        for (size_t j = 0; j < i; ++j)
            if (out.cells[i][j] != 0)
                throw std::logic_error("monotonicity matrix: nonzero entry below the diagonal");
    }
    return out;
}

ExtractionResult extract_cp_hom_counts(const Graph& h, const PropertySpec& phi,
                                       const HColouredGraph& g, const Budgets& budgets) {
    if (g.pattern() != h) throw usage_error("extract_cp_hom_counts: pattern mismatch");

    MonotonicityMatrix matrix = build_monotonicity_matrix(h, budgets);
    CoefficientTable table = coefficient_table(phi, h, budgets);
    const size_t n = matrix.order.size();

    // Oracle queries on tensor products: b[j] is the colourful count in
    // g x_H fractured(sigma_j).
    std::vector<Int> oracle(n);
    for (size_t j = 0; j < n; ++j) {
        HColouredGraph factor = to_coloured(fractured_graph(h, matrix.order[j]), h);
        oracle[j] = count_colourful(phi, h, tensor_product(g, factor), budgets);
    }

    // b = y^T M with M unit upper triangular: solve by forward substitution
    // in the linear-extension order (all divisions are by 1).
    ExtractionResult out;
    out.order = matrix.order;
    out.coefficients = table.values;
    out.weighted.assign(n, 0);
    for (size_t j = 0; j < n; ++j) {
        Int acc = oracle[j];
        for (size_t i = 0; i < j; ++i) acc -= out.weighted[i] * matrix.cells[i][j];
        out.weighted[j] = acc;
    }

    out.cp_homs.assign(n, std::nullopt);
    for (size_t i = 0; i < n; ++i) {
        if (out.coefficients[i] == 0) continue;  // 0 * x reveals nothing
        if (out.weighted[i] % out.coefficients[i] != 0)
            throw std::logic_error("extraction: weighted count not divisible by coefficient");
        out.cp_homs[i] = out.weighted[i] / out.coefficients[i];
    }
    return out;
}

}  // namespace edgesub
