#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgesub/budgets.hpp"
#include "edgesub/coefficient.hpp"
#include "edgesub/graph.hpp"
#include "edgesub/ints.hpp"

namespace edgesub {

struct RationalPoint {
    Rat x;
    Rat y;
};

enum class TutteMethod { brute, delcon, closed_form };

struct TutteValue {
    Rat value;
    TutteMethod provenance = TutteMethod::brute;
};

// Number of connected components of (V(g), A); isolated vertices count.
long components_of_subset(const Graph& g, const std::vector<int>& edge_ids);
long components_of_subset(const MultiGraph& g, const std::vector<int>& edge_positions);

// T^k_G(x,y) = sum over k-edge subsets A of
//   (x-1)^(k(A)-k(E)) * (y-1)^(k(A)+k-#V)
// with 0^0 = 1. Both exponents are provably nonnegative; the loop checks
// this and throws logic_error on violation.
TutteValue tutte_k_bruteforce(const Graph& g, int k, const RationalPoint& p,
                              const Budgets& budgets = {});

// Modified variant S^k_G = sum (x-1)^k(A) (y-1)^(k(A)+#A), related by
// S^k_G = (x-1)^k(E) (y-1)^#V T^k_G. Defined on multigraphs so the
// deletion-contraction recursion stays inside the type.
Rat modified_tutte_k_bruteforce(const MultiGraph& g, int k, const RationalPoint& p,
                                const Budgets& budgets = {});

// Deletion-contraction on the modified variant
//   S^k_G = S^k_{G \ e} + (y-1) S^{k-1}_{G/e}
// (a loop contributes S^k_{G\e} + (y-1) S^{k-1}_{G\e}), then converts back.
// Delegates to brute force when x = 1 or y = 1 where the conversion factor
// vanishes.
TutteValue tutte_k_delcon(const MultiGraph& g, int k, const RationalPoint& p,
                          const Budgets& budgets = {});

// Classical polynomials over all edge subsets (used by the aggregation
// identity and the sum-over-k consistency checks).
Rat classical_tutte(const Graph& g, const RationalPoint& p, const Budgets& budgets = {});
Rat classical_modified_tutte(const MultiGraph& g, const RationalPoint& p,
                             const Budgets& budgets = {});

// Checks sum_{l=0}^{k} C(#E-l, k-l) S^l_G  ==  sum_{|A|=k} S_{(V,A)}
// by exact evaluation of both sides.
bool aggregation_identity_check(const Graph& g, int k, const RationalPoint& p,
                                const Budgets& budgets = {});

struct SpecialPointCounts {
    Int k_forests;
    std::optional<Int> chromatic_pairs;  // set when a colour count c was given
    Int acyclic_orientation_pairs;
    Int even_component_subsets;
    Int even_betti_subsets;
};

// Counting interpretations at the individual points: k-forests at (2,1),
// (subset, c-colouring) pairs via the aggregation of values at (1-c, 0),
// (subset, acyclic orientation) pairs via (2,0), and the two parity counts
// at (0,2) and (2,0).
SpecialPointCounts special_point_counters(const Graph& g, int k, std::optional<long> c,
                                          const Budgets& budgets = {});

// T^k_G(1, y): zero without enumeration when #V > 2k (no k-edge spanning
// subgraph exists), brute force otherwise.
TutteValue tutte_x1_line(const Graph& g, int k, const Rat& y, const Budgets& budgets = {});

// Reduced variant with the (x-1)^(#V-cc(G)) prefactor removed; requires x != 1.
Rat hat_tutte_k_bruteforce(const Graph& g, int k, const RationalPoint& p,
                           const Budgets& budgets = {});

struct PointClassification {
    Verdict exact;
    Verdict approx;
};

// Exact: polynomial on x=y=1 and on the hyperbola (x-1)(y-1)=1; FPT but
// #P-hard on the rest of the line x=1; #W[1]-hard otherwise. Approx, with
// z=(x-1)(y-1): FPRAS when 0<=z<=1 and (x!=1 or y=1); FPTRAS on the rest of
// x=1; open outside the band.
PointClassification classify_point(const RationalPoint& p);

// Human-readable interpretation at well-known points ("k-forests", ...).
std::optional<std::string> point_interpretation(const RationalPoint& p);

}  // namespace edgesub
