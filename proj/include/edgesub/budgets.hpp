#pragma once

#include <cstdint>

namespace edgesub {

// Size guards and work budgets. Everything is desk scale by design; these
// caps turn runaway inputs into capacity_error instead of hangs.
struct Budgets {
    // Isomorphism search: cap per connected component, plus a node budget
    // for the backtracking itself.
    int iso_component_cap = 16;
    long long iso_node_budget = 20'000'000;

    // Canonical labelling is exhaustive permutation search; hard cap.
    int canonical_cap = 16;

    // Minor containment: cap on a connected host entering the
    // delete/contract core (cheap structural routes run first).
    int minor_host_cap = 14;
    long long minor_node_budget = 4'000'000;

    // Homomorphism / embedding counting: cap on pattern vertices.
    int hom_pattern_cap = 10;

    // Fracture enumeration: cap on the lattice size Prod_v Bell(deg v).
    long long fracture_budget = 5000;

    // Brute-force subset loops: cap on C(#E, k) style enumerations.
    long long subset_budget = 100'000'000;

    // Phi_k enumeration cap on k (C(C(2k,2),k) subsets get examined).
    int phi_k_cap = 5;

    // Hamiltonicity is decided by subset DP; cap on vertices.
    int hamiltonian_cap = 20;

    // Exact treewidth (subset DP) cap on vertices.
    int treewidth_cap = 16;

    // FPTRAS: cap on the number of samples t, and on the subset-memo size.
    long long fptras_sample_budget = 300'000'000;
    long long fptras_memo_cap = 1 << 22;

    // criteria_probe bound cap.
    int probe_bound_cap = 50;
};

}  // namespace edgesub
