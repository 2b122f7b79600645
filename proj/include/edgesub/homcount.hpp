#pragma once

#include "edgesub/budgets.hpp"
#include "edgesub/coloured.hpp"
#include "edgesub/graph.hpp"
#include "edgesub/ints.hpp"

namespace edgesub {

// |Hom(f, g)|: edge-preserving vertex maps.
Int count_homs(const Graph& f, const Graph& g, const Budgets& budgets = {});

// |Emb(f, g)|: injective homomorphisms.
Int count_embs(const Graph& f, const Graph& g, const Budgets& budgets = {});

// |Aut(g)|.
Int count_auts(const Graph& g, const Budgets& budgets = {});

// Number of subgraphs of g isomorphic to h: |Emb(h,g)| / |Aut(h)|.
Int count_subs(const Graph& h, const Graph& g, const Budgets& budgets = {});

// Existence check with early exit (used by the decision fallback).
bool embedding_exists(const Graph& f, const Graph& g, const Budgets& budgets = {});

// Colour-preserving homomorphisms between H-coloured graphs; candidate
// images are pruned to colour classes. Throws usage_error on pattern
// mismatch.
Int count_cp_homs(const HColouredGraph& f, const HColouredGraph& g);

}  // namespace edgesub
