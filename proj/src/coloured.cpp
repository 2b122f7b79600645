#include "edgesub/coloured.hpp"

#include <algorithm>
#include <numeric>

#include "edgesub/errors.hpp"

namespace edgesub {

HColouredGraph::HColouredGraph(Graph g, Graph h, std::vector<int> colour)
    : g_(std::move(g)), h_(std::move(h)), colour_(std::move(colour)) {
    if (static_cast<int>(colour_.size()) != g_.vertex_count())
        throw usage_error("coloured graph: colour vector size mismatch");
    for (int c : colour_)
        if (c < 0 || c >= h_.vertex_count())
            throw usage_error("coloured graph: colour out of range");
    edge_colour_.reserve(g_.edge_count());
    for (int id = 0; id < g_.edge_count(); ++id) {
        auto [u, v] = g_.edge(id);
        int he = h_.edge_id(colour_[u], colour_[v]);
        if (he < 0)
            throw usage_error("coloured graph: colouring is not a homomorphism (edge {" +
                              std::to_string(u) + "," + std::to_string(v) + "})");
        edge_colour_.push_back(he);
    }
}

std::vector<std::vector<int>> HColouredGraph::colour_classes() const {
    std::vector<std::vector<int>> out(h_.vertex_count());
    for (int v = 0; v < g_.vertex_count(); ++v) out[colour_[v]].push_back(v);
    return out;
}

std::vector<std::vector<int>> HColouredGraph::edge_colour_classes() const {
    std::vector<std::vector<int>> out(h_.edge_count());
    for (int id = 0; id < g_.edge_count(); ++id) out[edge_colour_[id]].push_back(id);
    return out;
}

HColouredGraph identity_coloured(const Graph& h) {
    std::vector<int> colour(h.vertex_count());
    std::iota(colour.begin(), colour.end(), 0);
    return HColouredGraph(h, h, std::move(colour));
}

HColouredGraph to_coloured(const FracturedGraph& fg, const Graph& h) {
    return HColouredGraph(fg.graph, h, fg.colour);
}

HColouredGraph tensor_product(const HColouredGraph& a, const HColouredGraph& b) {
    if (!a.same_pattern(b)) throw usage_error("tensor product: pattern mismatch");
    std::vector<std::pair<int, int>> vertices;
    for (int x = 0; x < a.graph().vertex_count(); ++x)
        for (int y = 0; y < b.graph().vertex_count(); ++y)
            if (a.colour_of(x) == b.colour_of(y)) vertices.emplace_back(x, y);

    std::vector<int> colour;
    colour.reserve(vertices.size());
    for (const auto& [x, y] : vertices) colour.push_back(a.colour_of(x));

    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < vertices.size(); ++i) {
        for (size_t j = i + 1; j < vertices.size(); ++j) {
            if (a.graph().has_edge(vertices[i].first, vertices[j].first) &&
                b.graph().has_edge(vertices[i].second, vertices[j].second))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    Graph g(static_cast<int>(vertices.size()), std::move(edges));
    return HColouredGraph(std::move(g), a.pattern(), std::move(colour));
}

}  // namespace edgesub
