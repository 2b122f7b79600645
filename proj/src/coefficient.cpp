#include "edgesub/coefficient.hpp"

#include <algorithm>

#include "edgesub/errors.hpp"
#include "edgesub/family.hpp"
#include "edgesub/fractured.hpp"
#include "edgesub/invariants.hpp"
#include "edgesub/torus.hpp"

namespace edgesub {

CoefficientTable coefficient_table(const PropertySpec& phi, const Graph& h,
                                   const Budgets& budgets) {
    CoefficientTable out;
    out.h = h;
    out.property = phi.name;
    out.order = enumerate_fractures(h, budgets);
    const size_t n = out.order.size();

    std::vector<char> satisfied(n, 0);
    for (size_t i = 0; i < n; ++i)
        satisfied[i] = evaluate(phi, fractured_graph(h, out.order[i]).graph, budgets);

    out.values.assign(n, 0);
    for (size_t j = 0; j < n; ++j) {
        Int value = 0;
        for (size_t i = 0; i < n; ++i) {
            if (!satisfied[i]) continue;
            if (!refines(h, out.order[i], out.order[j])) continue;
            value += mobius(h, out.order[i], out.order[j]);
        }
        out.values[j] = value;
    }
    return out;
}

Int top_coefficient(const PropertySpec& phi, const Graph& h, const Budgets& budgets) {
    Int total = 0;
    for_each_fracture(
        h,
        [&](const Fracture& f) {
            if (!evaluate(phi, fractured_graph(h, f).graph, budgets)) return;
            Int term = 1;
            for (const auto& part : f.blocks) {
                long blocks = static_cast<long>(part.size());
                if (blocks == 0) continue;
                Int factor = factorial(blocks - 1);
                if ((blocks - 1) % 2 == 1) factor = -factor;
                term *= factor;
            }
            total += term;
        },
        budgets);
    return total;
}

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

long torus_top_coefficient_mod(const PropertySpec& phi, long ell, const Budgets& budgets) {
    if (!is_prime(ell) || ell < 3)
        throw usage_error("torus residue: modulus must be a prime >= 3");
    struct Term {
        TorusFixedPointType type;
        long weight;
    };
    static const Term terms[] = {
        {TorusFixedPointType::matching, -6},
        {TorusFixedPointType::matching_and_cycles, 4},
        {TorusFixedPointType::wedge_packing, 8},
        {TorusFixedPointType::cycle_packing_i, -1},
        {TorusFixedPointType::cycle_packing_ii, -2},
        {TorusFixedPointType::sun_packing, -4},
        {TorusFixedPointType::torus, 1},
    };
    long residue = 0;
    for (const auto& [type, weight] : terms) {
        Graph model = torus_fixed_point_model(type, ell);
        if (evaluate(phi, model, budgets)) residue += weight;
    }
    residue %= ell;
    if (residue < 0) residue += ell;
    return residue;
}

std::string to_string(ComplexityTag tag) {
    switch (tag) {
        case ComplexityTag::polynomial: return "polynomial";
        case ComplexityTag::fpt: return "FPT";
        case ComplexityTag::fptras: return "FPTRAS";
        case ComplexityTag::fpras: return "FPRAS";
        case ComplexityTag::sharp_w1_hard: return "#W[1]-hard";
        case ComplexityTag::sharp_p_hard_fpt: return "FPT, #P-hard";
        case ComplexityTag::inconclusive: return "inconclusive";
        case ComplexityTag::open: return "open";
    }
    return "?";
}

Verdict hardness_criterion(const PropertySpec& phi, const std::vector<long>& primes,
                           const Budgets& budgets) {
    if (primes.empty()) throw usage_error("hardness criterion: prime list is empty");
    std::string residues;
    long witness = 0;
    long witness_residue = 0;
    for (long ell : primes) {
        long r = torus_top_coefficient_mod(phi, ell, budgets);
        residues += (residues.empty() ? "" : ", ") + std::to_string(ell) + "->" + std::to_string(r);
        if (r != 0 && witness == 0) {
            witness = ell;
            witness_residue = r;
        }
    }
    Verdict out;
    out.facet = "exact-count";
    if (witness != 0) {
        out.tag = ComplexityTag::sharp_w1_hard;
        out.citation = "Thm 1.7: torus coefficient criterion met at l=" + std::to_string(witness) +
                       " (residue " + std::to_string(witness_residue) + "; residues " + residues +
                       "). Finitely many primes are evidence for, not a proof of, the " +
                       "infinitely-many-primes hypothesis.";
    } else {
        out.tag = ComplexityTag::inconclusive;
        out.citation = "Thm 1.7: all tested residues vanish (" + residues +
                       "); a finite prime list cannot certify or refute the " +
                       "infinitely-many-primes hypothesis.";
    }
    return out;
}

MinorClosedClassification classify_minor_closed(const std::vector<Graph>& forbidden_minors) {
    MinorClosedClassification out;
    out.approx = {"approx-count", ComplexityTag::fptras, "Thm 1.1(2)"};
    out.decision = {"decision", ComplexityTag::fpt, "Thm 1.1(3)"};

    if (forbidden_minors.empty()) {
        out.exact = {"exact-count", ComplexityTag::fpt, "Thm 1.1(1): trivially true"};
        return out;
    }
    bool bounded_matching = false;
    for (const auto& f : forbidden_minors) {
        std::vector<int> all(f.edge_count());
        for (int i = 0; i < f.edge_count(); ++i) all[i] = i;
        Graph stripped = induced_by_edges(f, all);
        if (is_matching_graph(stripped)) bounded_matching = true;
    }
    if (bounded_matching) {
        out.exact = {"exact-count", ComplexityTag::fpt,
                     "Thm 1.1(1): a forbidden minor is a matching, so the matching number of "
                     "the property is bounded"};
        return out;
    }
    bool all_have_degree_three = true;
    for (const auto& f : forbidden_minors)
        if (graph_invariants(f).max_degree < 3) all_have_degree_three = false;
    out.exact.facet = "exact-count";
    out.exact.tag = ComplexityTag::sharp_w1_hard;
    out.exact.citation =
        all_have_degree_three
            ? "Thm 1.1(1); ETH: no f(k)*|G|^{o(k/log k)} algorithm, every forbidden minor has "
              "a vertex of degree >= 3"
            : "Thm 1.1(1); no tight lower bound claimed: some forbidden minor has maximum "
              "degree <= 2";
    return out;
}

}  // namespace edgesub
