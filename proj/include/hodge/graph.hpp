#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace hodge {

/// An ordered vertex triple (i, j, k), i < j < k, whose three pairs are edges.
struct Triangle {
    int i, j, k;
    friend bool operator==(const Triangle& a, const Triangle& b) {
        return a.i == b.i && a.j == b.j && a.k == b.k;
    }
    friend bool operator<(const Triangle& a, const Triangle& b) {
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.k < b.k;
    }
    bool contains(int v) const { return v == i || v == j || v == k; }
};

/// Simple undirected graph on vertices 0..n-1 with an ordered edge list.
/// The edge order is part of the graph's identity: every edge-indexed matrix
/// downstream follows it. Construction rejects self-loops and duplicates.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    std::size_t m() const { return edges_.size(); }

    /// Edge i as the pair it was ingested with (not normalised).
    const std::pair<int, int>& edge(std::size_t i) const { return edges_[i]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v]; }
    int degree(int u) const { return static_cast<int>(neighbors_[u].size()); }
    const std::vector<int>& neighbors(int u) const { return neighbors_[u]; }  // sorted

    /// Index of the undirected edge {u, v}, if present.
    std::optional<std::size_t> edge_index(int u, int v) const;

    bool is_complete() const;
    bool is_regular() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<char> adj_;                   // n*n symmetric
    std::vector<std::vector<int>> neighbors_;
};

/// All 3-cliques, sorted lexicographically by (i, j, k).
std::vector<Triangle> enumerate_triangles(const Graph& g);

/// Number of triangles containing edge e; equals |N(u) ∩ N(v)| for e = {u,v}.
std::size_t triangle_degree_edge(const Graph& g, std::size_t e);

/// Number of triangles containing vertex u.
std::size_t triangle_degree_vertex(const Graph& g, int u);

/// |N(e)| = d(u) + d(v) - 2 for e = {u,v}: edges sharing an endpoint with e.
std::size_t edge_neighborhood_size(const Graph& g, std::size_t e);

struct Components {
    std::size_t count;
    std::vector<int> label;  // per-vertex component id, 0-based
};
Components components(const Graph& g);

/// Longest shortest path; nullopt when the graph is disconnected.
std::optional<std::size_t> diameter(const Graph& g);

}  // namespace hodge
