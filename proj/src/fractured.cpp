#include "edgesub/fractured.hpp"

#include <algorithm>
#include <map>

#include "edgesub/errors.hpp"

namespace edgesub {

FracturedGraph fractured_graph(const Graph& h, const Fracture& rho) {
    validate_fracture(h, rho);

    FracturedGraph out;
    // One vertex per (base vertex, block), in that order.
    std::vector<std::map<int, int>> vertex_of(h.vertex_count());  // edge id -> fractured vertex
    for (int v = 0; v < h.vertex_count(); ++v) {
        for (size_t b = 0; b < rho.blocks[v].size(); ++b) {
            int id = static_cast<int>(out.origin.size());
            out.origin.emplace_back(v, static_cast<int>(b));
            out.colour.push_back(v);
            for (int e : rho.blocks[v][b]) vertex_of[v][e] = id;
        }
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(h.edge_count());
    for (int e = 0; e < h.edge_count(); ++e) {
        auto [u, v] = h.edge(e);
        edges.emplace_back(vertex_of[u].at(e), vertex_of[v].at(e));
    }
    out.graph = Graph(static_cast<int>(out.origin.size()), edges);

    // Distinct base edges land on distinct vertex pairs, so the sorted edge
    // list of the fractured graph is in bijection with E(h).
    out.edge_to_base.assign(h.edge_count(), -1);
    for (int e = 0; e < h.edge_count(); ++e) {
        int a = std::min(edges[e].first, edges[e].second);
        int b = std::max(edges[e].first, edges[e].second);
        int id = out.graph.edge_id(a, b);
        if (id < 0 || out.edge_to_base[id] != -1)
            throw std::logic_error("fractured_graph: edge bijection broken");
        out.edge_to_base[id] = e;
    }
    return out;
}

}  // namespace edgesub
