#pragma once

#include <functional>
#include <string>
#include <vector>

#include "edgesub/budgets.hpp"
#include "edgesub/graph.hpp"
#include "edgesub/ints.hpp"

namespace edgesub {

// A fracture of a base graph H assigns to every vertex v a partition of the
// edges incident to v. Blocks hold edge ids of H, each block sorted and the
// blocks ordered by smallest member; degree-0 vertices carry the empty
// partition. Fractures of H form a lattice under blockwise refinement.
struct Fracture {
    std::vector<std::vector<std::vector<int>>> blocks;  // [vertex][block][edge ids]

    bool operator==(const Fracture&) const = default;
    auto operator<=>(const Fracture&) const = default;

    long total_blocks() const;
};

// All-singleton partitions (the minimum of the lattice).
Fracture bottom_fracture(const Graph& h);
// One block per vertex (the maximum).
Fracture top_fracture(const Graph& h);

// True iff every block of s_v lies inside a block of r_v, for every v.
// Throws usage_error when either fracture does not fit h.
bool refines(const Graph& h, const Fracture& s, const Fracture& r);

// Moebius function of the fracture lattice: the product over vertices of the
// partition-lattice Moebius values prod_{blocks b of r_v} (-1)^(n_b-1)(n_b-1)!
// where n_b counts the s_v-blocks inside b. Requires refines(h, s, r).
Int mobius(const Graph& h, const Fracture& s, const Fracture& r);

// Lattice size Prod_v Bell(deg v), without materializing anything.
Int count_fractures(const Graph& h);

// All fractures of h in the fixed linear extension: decreasing total block
// count, ties broken by the per-vertex restricted-growth encodings. This
// places bottom first, top last, and refines-implies-earlier holds.
std::vector<Fracture> enumerate_fractures(const Graph& h, const Budgets& budgets = {});

// Enumeration without materializing the list (same order).
void for_each_fracture(const Graph& h, const std::function<void(const Fracture&)>& fn,
                       const Budgets& budgets = {});

// Sort key realizing the linear extension above.
std::string fracture_order_key(const Graph& h, const Fracture& f);

// Checks that f is structurally a fracture of h (blocks partition each
// incident edge set); throws usage_error otherwise.
void validate_fracture(const Graph& h, const Fracture& f);

}  // namespace edgesub
