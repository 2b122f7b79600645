#include "edgesub/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "edgesub/errors.hpp"

namespace edgesub {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw usage_error("graph: negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u == v) throw usage_error("graph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_)
            throw usage_error("graph: edge endpoint out of range: {" + std::to_string(u) + "," +
                              std::to_string(v) + "}");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw usage_error("graph: duplicate edge");
}

bool Graph::has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

int Graph::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
    std::vector<std::vector<int>> adj(n_);
    for (const auto& [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<std::uint64_t> Graph::adjacency_bits() const {
    if (n_ > 64) throw capacity_error("adjacency_bits: graph has more than 64 vertices");
    std::vector<std::uint64_t> rows(n_, 0);
    for (const auto& [u, v] : edges_) {
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
    }
    return rows;
}

std::vector<int> Graph::incident_edges(int v) const {
    std::vector<int> out;
    for (int id = 0; id < edge_count(); ++id)
        if (edges_[id].first == v || edges_[id].second == v) out.push_back(id);
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

int Graph::component_count() const {
    UnionFind uf(n_);
    int comps = n_;
    for (const auto& [u, v] : edges_)
        if (uf.unite(u, v)) --comps;
    return comps;
}

std::vector<int> Graph::component_labels() const {
    UnionFind uf(n_);
    for (const auto& [u, v] : edges_) uf.unite(u, v);
    std::vector<int> label(n_, -1);
    int next = 0;
    for (int v = 0; v < n_; ++v) {
        int r = uf.find(v);
        if (label[r] < 0) label[r] = next++;
        label[v] = label[r];
    }
    return label;
}

Graph induced_by_edges(const Graph& g, const std::vector<int>& edge_ids) {
    std::vector<int> keep;
    for (int id : edge_ids) {
        keep.push_back(g.edge(id).first);
        keep.push_back(g.edge(id).second);
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> relabel(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) relabel[keep[i]] = i;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_ids.size());
    for (int id : edge_ids)
        edges.emplace_back(relabel[g.edge(id).first], relabel[g.edge(id).second]);
    return Graph(static_cast<int>(keep.size()), std::move(edges));
}

Graph spanning_subgraph(const Graph& g, const std::vector<int>& edge_ids) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_ids.size());
    for (int id : edge_ids) edges.push_back(g.edge(id));
    return Graph(g.vertex_count(), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges();
    int off = a.vertex_count();
    for (const auto& [u, v] : b.edges()) edges.emplace_back(u + off, v + off);
    return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

MultiGraph::MultiGraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw usage_error("multigraph: negative vertex count");
    std::vector<int> ids;
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_) throw usage_error("multigraph: endpoint out of range");
        ids.push_back(e.id);
    }
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw usage_error("multigraph: duplicate edge id");
}

MultiGraph::MultiGraph(const Graph& g) : n_(g.vertex_count()) {
    for (int id = 0; id < g.edge_count(); ++id)
        edges_.push_back({id, g.edge(id).first, g.edge(id).second});
}

MultiGraph MultiGraph::delete_edge(int pos) const {
    std::vector<Edge> edges = edges_;
    edges.erase(edges.begin() + pos);
    return MultiGraph(n_, std::move(edges));
}

MultiGraph MultiGraph::contract_edge(int pos) const {
    const Edge e = edges_[pos];
    if (e.u == e.v) throw usage_error("multigraph: cannot contract a loop");
    std::vector<Edge> edges;
    edges.reserve(edges_.size() - 1);
    // Merge v into u, then relabel the last vertex into the hole at v.
    auto remap = [&](int w) {
        if (w == e.v) return e.u;
        if (w == n_ - 1) return e.v == n_ - 1 ? e.u : e.v;
        return w;
    };
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        if (i == pos) continue;
        Edge f = edges_[i];
        f.u = remap(f.u);
        f.v = remap(f.v);
        edges.push_back(f);
    }
    return MultiGraph(n_ - 1, std::move(edges));
}

int MultiGraph::component_count() const {
    UnionFind uf(n_);
    int comps = n_;
    for (const auto& e : edges_)
        if (e.u != e.v && uf.unite(e.u, e.v)) --comps;
    return comps;
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
        }
        return false;
    };
    auto fail = [&](const std::string& msg) -> void {
        throw parse_error("edge list, line " + std::to_string(line_no) + ": " + msg);
    };

    if (!next_line()) {
        ++line_no;
        fail("missing header \"n m\"");
    }
    std::istringstream header(line);
    long n = 0, m = 0;
    std::string extra;
    if (!(header >> n >> m) || (header >> extra)) fail("expected header \"n m\"");
    if (n < 0 || m < 0) fail("negative counts in header");

    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<char>> seen;
    for (long i = 0; i < m; ++i) {
        if (!next_line()) {
            ++line_no;
            fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        }
        std::istringstream row(line);
        long u = 0, v = 0;
        if (!(row >> u >> v) || (row >> extra)) fail("expected \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n) fail("endpoint out of range");
        if (u == v) fail("self-loop");
        edges.emplace_back(static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v)));
    }
    if (next_line()) fail("trailing content after edge list");

    std::vector<std::pair<int, int>> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw parse_error("edge list: duplicate edge");
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open graph file: " + path);
    return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace edgesub
