#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hodge/graph.hpp"
#include "hodge/incidence.hpp"
#include "hodge/int_matrix.hpp"

namespace hodge {

enum class HelmholtzianBuild { direct, factored, split, join_blocks };

/// The edge-indexed Helmholtzian (Hodge 1-Laplacian) matrix.
/// Symmetric, m x m, diagonal entry for edge e equal to its triangle degree
/// plus two, off-diagonals in {-1, 0, +1}.
struct HelmholtzianMatrix {
    IntMatrix mat;
    HelmholtzianBuild provenance = HelmholtzianBuild::direct;

    std::size_t m() const { return mat.rows(); }
};

/// Signed graph with loops on the vertex set E(G): Delta(e)+2 loops at each
/// vertex, a positive edge for every head-to-head / tail-to-tail pair outside
/// a common triangle, a negative edge for every head-to-tail pair outside one.
struct SignedLoopGraph {
    std::size_t m = 0;                                    // vertices = edges of G
    std::vector<std::size_t> loops;                       // loop count per vertex
    std::vector<std::pair<std::size_t, std::size_t>> pos_edges;  // i < j
    std::vector<std::pair<std::size_t, std::size_t>> neg_edges;  // i < j

    /// Adjacency of the signed loop graph; its diagonal carries loop counts,
    /// so the matrix coincides entrywise with the Helmholtzian.
    IntMatrix adjacency() const;

    /// Loop-free reduction: same signs off the diagonal, zero diagonal.
    IntMatrix reduced_adjacency() const;

    /// Diagonal matrix of loop counts.
    IntMatrix loop_diagonal() const;
};

/// Entrywise construction from the four-case sign rule.
HelmholtzianMatrix build_H_direct(const Graph& g, const Orientation& o);

/// Factored construction B*B^T + C^T*C; equal to the direct build entrywise.
HelmholtzianMatrix build_H_factored(const Graph& g, const Orientation& o);

SignedLoopGraph build_signed_loop_graph(const Graph& g, const Orientation& o);

/// Reassembles H as loop diagonal plus loop-free signed adjacency.
HelmholtzianMatrix build_H_split(const SignedLoopGraph& slg);

struct QuadraticFormValue {
    double via_matrix;         // x^T H x
    double via_combinatorial;  // edge/pair expansion of the same form
};

/// Evaluates x^T H x and its combinatorial expansion
///   sum_e (3*Delta(e)+4-d(e+)-d(e-)) x_e^2
///   + sum over head-to-tail pairs (x_e - x_e')^2
///   + sum over same-end pairs (x_e + x_e')^2,
/// asserting the two agree to 1e-9 relative.
QuadraticFormValue quadratic_form(const HelmholtzianMatrix& h, std::span<const double> x);

}  // namespace hodge
