#pragma once

#include <vector>

#include "edgesub/fractured.hpp"
#include "edgesub/graph.hpp"

namespace edgesub {

// A graph G together with a homomorphism c : V(G) -> V(H) into a pattern H.
// Every edge of G maps to an edge of H, which induces the edge-colouring
// used by the colourful counting paths.
class HColouredGraph {
  public:
    // Validates that `colour` is a homomorphism; throws usage_error if not.
    HColouredGraph(Graph g, Graph h, std::vector<int> colour);

    const Graph& graph() const { return g_; }
    const Graph& pattern() const { return h_; }
    const std::vector<int>& colours() const { return colour_; }
    int colour_of(int v) const { return colour_[v]; }

    // H-edge id that g-edge `id` maps to.
    int edge_colour(int id) const { return edge_colour_[id]; }
    // G-vertices per H-vertex.
    std::vector<std::vector<int>> colour_classes() const;
    // G-edge ids per H-edge id.
    std::vector<std::vector<int>> edge_colour_classes() const;

    bool same_pattern(const HColouredGraph& other) const { return h_ == other.h_; }
    bool operator==(const HColouredGraph&) const = default;

  private:
    Graph g_;
    Graph h_;
    std::vector<int> colour_;
    std::vector<int> edge_colour_;
};

// H coloured by the identity map.
HColouredGraph identity_coloured(const Graph& h);

// A fractured graph with its canonical colouring.
HColouredGraph to_coloured(const FracturedGraph& fg, const Graph& h);

// Colour-preserving tensor product: vertices are colour-agreeing pairs,
// (x,y) ~ (x',y') iff both coordinates are edges; colour (x,y) -> c(x).
// Throws usage_error when the patterns differ.
HColouredGraph tensor_product(const HColouredGraph& a, const HColouredGraph& b);

}  // namespace edgesub
