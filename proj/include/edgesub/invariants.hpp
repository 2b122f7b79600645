#pragma once

#include "edgesub/graph.hpp"

namespace edgesub {

struct GraphInvariants {
    int component_count = 0;
    long betti_number = 0;  // #E - #V + components (circuit rank)
    int max_degree = 0;
    int isolated_vertex_count = 0;
};

GraphInvariants graph_invariants(const Graph& g);

// Exact maximum matching (blossom algorithm); works on arbitrary graphs.
int max_matching_size(const Graph& g);

bool is_connected_graph(const Graph& g);
bool is_forest_graph(const Graph& g);
bool is_bipartite_graph(const Graph& g);

}  // namespace edgesub
