#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace edgesub {

// Simple undirected graph: no loops, no parallel edges. Edges are stored
// sorted with u < v, so edge ids (positions) are deterministic; fractures,
// colourings and the JSON formats all refer to these ids.
class Graph {
  public:
    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::pair<int, int>& edge(int id) const { return edges_[id]; }

    bool has_edge(int u, int v) const;
    // Id of edge {u,v}, or -1 when absent.
    int edge_id(int u, int v) const;

    std::vector<int> degrees() const;
    std::vector<std::vector<int>> adjacency_lists() const;
    // Adjacency rows as bitmasks; requires vertex_count <= 64.
    std::vector<std::uint64_t> adjacency_bits() const;
    // Ids of edges incident to v, ascending.
    std::vector<int> incident_edges(int v) const;

    int component_count() const;
    std::vector<int> component_labels() const;

    bool operator==(const Graph&) const = default;
    auto operator<=>(const Graph&) const = default;

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

// Subgraph spanned by the given edge ids with isolated vertices removed;
// kept vertices are relabelled in increasing order of their old index.
Graph induced_by_edges(const Graph& g, const std::vector<int>& edge_ids);

// Same vertex set, edges restricted to the given ids.
Graph spanning_subgraph(const Graph& g, const std::vector<int>& edge_ids);

Graph disjoint_union(const Graph& a, const Graph& b);

// Multigraph with stable edge ids; loops and parallel edges are allowed.
// Deletion/contraction in the Tutte recursion lives here: contraction keeps
// the loops and parallel edges it creates so edge cardinalities stay exact.
class MultiGraph {
  public:
    struct Edge {
        int id;
        int u, v;  // u <= v; u == v is a loop
    };

    MultiGraph() = default;
    MultiGraph(int vertex_count, std::vector<Edge> edges);
    explicit MultiGraph(const Graph& g);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool is_loop(int pos) const { return edges_[pos].u == edges_[pos].v; }

    // Both return a new graph; `pos` indexes into edges().
    MultiGraph delete_edge(int pos) const;
    // Contract non-loop edge at `pos`: merges the endpoints (loops arising
    // from parallel edges are kept), removes the contracted edge.
    MultiGraph contract_edge(int pos) const;

    int component_count() const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// Edge-list text format: line 1 "n m", then m lines "u v" (0-based).
// Violations are rejected with the offending line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_file(const std::string& path);
std::string format_edge_list(const Graph& g);

}  // namespace edgesub
