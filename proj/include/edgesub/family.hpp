#pragma once

#include <string>
#include <vector>

#include "edgesub/graph.hpp"

namespace edgesub {

// Named graph families with deterministic vertex numbering:
//   matching M_k:  vertices 0..2k-1, edges {2i, 2i+1}
//   path P_k:      k edges on vertices 0..k, edges {i, i+1}
//   cycle C_k:     vertices 0..k-1 around the ring (k >= 3)
//   star K_{1,k}:  centre 0, leaves 1..k
//   biclique K_{l,r}: left 0..l-1, right l..l+r-1
//   complete K_n
//   sun S_l:       cycle 0..l-1, pendant of cycle vertex i is l+i (l >= 3)
//   torus T_l:     vertex (i,j) -> i*l + j; (i,j) ~ (i+-1,j) and (i,j+-1)
//                  mod l (l >= 3)
//   grid B_k:      vertex (i,j) -> i*k + j for i,j in [0,k); edges between
//                  pairs at L1 distance 1
//   scaled l*H:    l disjoint copies of H, copy c offset by c*|V(H)|
//   union H1+H2:   components in argument order with offset indices
struct GraphFamilySpec {
    enum class Kind {
        matching,
        path,
        cycle,
        star,
        biclique,
        complete,
        sun,
        torus,
        grid,
        scaled,
        disjoint_union,
    };

    Kind kind = Kind::matching;
    long a = 0;  // primary size parameter (count of copies for `scaled`)
    long b = 0;  // secondary parameter (biclique right side)
    std::vector<GraphFamilySpec> parts;

    static GraphFamilySpec matching(long k);
    static GraphFamilySpec path(long k);
    static GraphFamilySpec cycle(long k);
    static GraphFamilySpec star(long k);
    static GraphFamilySpec biclique(long l, long r);
    static GraphFamilySpec complete(long n);
    static GraphFamilySpec sun(long l);
    static GraphFamilySpec torus(long l);
    static GraphFamilySpec grid(long k);
    static GraphFamilySpec scaled(long copies, GraphFamilySpec inner);
    static GraphFamilySpec join(std::vector<GraphFamilySpec> parts);

    std::string describe() const;
};

// Throws usage_error when parameters violate the family minima.
Graph generate_family(const GraphFamilySpec& spec);

// CLI spec strings: "k4" (complete), "m3", "p2", "c5", "s4" (sun),
// "star6", "t3" / "torus:3", "g3" / "grid:3", "biclique:2,3",
// "<n>x<spec>" for scaled copies, "+"-separated terms for disjoint unions.
GraphFamilySpec parse_family_spec(const std::string& text);

}  // namespace edgesub
