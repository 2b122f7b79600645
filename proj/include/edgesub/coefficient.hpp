#pragma once

#include <string>
#include <vector>

#include "edgesub/budgets.hpp"
#include "edgesub/fracture.hpp"
#include "edgesub/graph.hpp"
#include "edgesub/ints.hpp"
#include "edgesub/property.hpp"

namespace edgesub {

// The exact integer weights expressing the colourful pattern count as a
// linear combination of cpHom counts from fractured graphs:
//   a(rho) = sum over fractures s <= rho with Phi(fractured(s)) = 1
//            of mobius(s, rho).
struct CoefficientTable {
    Graph h;
    std::string property;
    std::vector<Fracture> order;  // the fixed linear extension
    std::vector<Int> values;
};

CoefficientTable coefficient_table(const PropertySpec& phi, const Graph& h,
                                   const Budgets& budgets = {});

// Value at the top fracture via the direct product formula
//   sum_{s in L(Phi,H)} prod_v (-1)^(|s_v|-1) (|s_v|-1)!
// (no full Moebius table).
Int top_coefficient(const PropertySpec& phi, const Graph& h, const Budgets& budgets = {});

// Residue in [0, ell) of the top coefficient of the torus T_ell, computed by
// evaluating phi on the seven fixed-point graphs and combining with weights
// (-6, 4, 8, -1, -2, -4, 1). Requires prime ell >= 3.
long torus_top_coefficient_mod(const PropertySpec& phi, long ell, const Budgets& budgets = {});

enum class ComplexityTag {
    polynomial,
    fpt,
    fptras,
    fpras,
    sharp_w1_hard,
    sharp_p_hard_fpt,
    inconclusive,
    open,
};

std::string to_string(ComplexityTag tag);

struct Verdict {
    std::string facet;  // "exact-count", "approx-count", "decision", "tutte-point"
    ComplexityTag tag = ComplexityTag::inconclusive;
    std::string citation;  // statement backing the verdict (never empty)
};

// Evaluates torus_top_coefficient_mod at each prime; any nonzero residue
// yields the hardness verdict. The verdict text always carries the caveat
// that finitely many primes are evidence, not a certificate, for the
// infinitely-many-primes hypothesis.
Verdict hardness_criterion(const PropertySpec& phi, const std::vector<long>& primes,
                           const Budgets& budgets = {});

struct MinorClosedClassification {
    Verdict exact;
    Verdict approx;
    Verdict decision;
};

// Case split for a minor-closed property given by its forbidden minors
// (empty list = trivially true). Exact counting is FPT iff the list is
// empty or some forbidden minor is a matching after stripping isolated
// vertices; the ETH-strength upgrade applies when every forbidden minor has
// a vertex of degree >= 3. Approximate counting always has an FPTRAS and
// decision is always FPT.
MinorClosedClassification classify_minor_closed(const std::vector<Graph>& forbidden_minors);

}  // namespace edgesub
