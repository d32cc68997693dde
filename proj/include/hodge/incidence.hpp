#pragma once

#include <utility>
#include <vector>

#include "hodge/graph.hpp"
#include "hodge/int_matrix.hpp"

namespace hodge {

/// Per-edge (tail, head) assignment. Index-aligned with the graph's edge list;
/// each pair must be the corresponding undirected edge.
class Orientation {
public:
    Orientation() = default;
    Orientation(const Graph& g, std::vector<std::pair<int, int>> directed);

    std::size_t m() const { return dir_.size(); }
    int tail(std::size_t e) const { return dir_[e].first; }
    int head(std::size_t e) const { return dir_[e].second; }

    Orientation with_edge_flipped(std::size_t e) const;

private:
    std::vector<std::pair<int, int>> dir_;
};

/// Low index -> high index on every edge.
Orientation canonical_orientation(const Graph& g);

/// Edge-vertex incidence, m x n: -1 at the tail, +1 at the head.
IntMatrix build_B(const Graph& g, const Orientation& o);

/// Triangle-edge incidence, t x m, rows following enumerate_triangles order.
/// Triangles are traversed i -> j -> k -> i; an edge scores +1 when its
/// direction matches a consecutive pair of that cycle, -1 otherwise.
IntMatrix build_C(const Graph& g, const Orientation& o);

/// Sign of edge e within triangle t (cyclic order i->j->k->i): +1 agree, -1 oppose.
int triangle_edge_sign(const Triangle& t, int tail, int head);

}  // namespace hodge
