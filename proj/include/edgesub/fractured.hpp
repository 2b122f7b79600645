#pragma once

#include <utility>
#include <vector>

#include "edgesub/fracture.hpp"
#include "edgesub/graph.hpp"

namespace edgesub {

// The graph obtained from H by splitting every vertex into one copy per
// block of its partition. Edges are in bijection with E(H) and the vertex
// map (v, block) -> v is the canonical H-colouring; blocks are nonempty, so
// fractured graphs never have isolated vertices.
struct FracturedGraph {
    Graph graph;
    std::vector<std::pair<int, int>> origin;  // vertex -> (base vertex, block index)
    std::vector<int> edge_to_base;            // edge id -> base edge id
    std::vector<int> colour;                  // vertex -> base vertex
};

FracturedGraph fractured_graph(const Graph& h, const Fracture& rho);

}  // namespace edgesub
