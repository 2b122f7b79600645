#pragma once

#include <array>
#include <string>
#include <vector>

#include "edgesub/fracture.hpp"
#include "edgesub/graph.hpp"

namespace edgesub {

// Direction labels for the four edges at a torus vertex (i,j):
// up -> (i,j+1), down -> (i,j-1), left -> (i-1,j), right -> (i+1,j).
enum class TorusDir { up = 0, down = 1, left = 2, right = 3 };

// Edge/direction bookkeeping for a generated torus T_l, so that the shift
// action on fractures is a pure relabelling of directions.
struct TorusGeometry {
    long ell = 0;
    Graph graph;
    // edge_at[v][d]: edge id of the direction-d edge at vertex v.
    std::vector<std::array<int, 4>> edge_at;

    static TorusGeometry make(long ell);

    int vertex(long i, long j) const;
    // Inverse of edge_at at vertex v; -1 if the edge is not incident to v.
    int direction_of(int v, int edge_id) const;
};

// The shift (di,dj) acting on a fracture of T_l: the partition at
// (i+di, j+dj) is the direction-transported partition at (i,j).
Fracture torus_shift_act(const TorusGeometry& geo, long di, long dj, const Fracture& rho);

// Isomorphism types of the fractured graphs at the shift-action fixed points.
enum class TorusFixedPointType {
    matching,             // M_{2l^2}
    matching_and_cycles,  // M_{l^2} + l C_l
    wedge_packing,        // l^2 P_2
    cycle_packing_i,      // 2l C_l
    cycle_packing_ii,     // l C_{2l}
    sun_packing,          // l S_l
    torus,                // T_l
};

std::string to_string(TorusFixedPointType t);

// The 15 fractures fixed by every shift: one uniform fracture per partition
// of {up,down,left,right}, tagged with the isomorphism type of the graph it
// induces. Type multiplicities are (1,2,4,1,2,4,1) in the enum order above.
std::vector<std::pair<Fracture, TorusFixedPointType>> torus_fixed_points(long ell);

// The graph the fixed points of the given type induce (generated family).
Graph torus_fixed_point_model(TorusFixedPointType type, long ell);

}  // namespace edgesub
