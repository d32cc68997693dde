#include "hodge/helmholtzian.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace hodge {

namespace {

// +1 for a same-end pair, -1 for head-to-tail, 0 for a co-triangular or
// disjoint pair. Two distinct edges of a simple graph share at most one vertex.
int pair_entry(const Graph& g, const Orientation& o, std::size_t e1, std::size_t e2) {
    int t1 = o.tail(e1), h1 = o.head(e1);
    int t2 = o.tail(e2), h2 = o.head(e2);
    if (h1 == h2 || t1 == t2) {
        int other1 = (h1 == h2) ? t1 : h1;
        int other2 = (h1 == h2) ? t2 : h2;
        return g.adjacent(other1, other2) ? 0 : 1;
    }
    if (h1 == t2 || t1 == h2) {
        int other1 = (h1 == t2) ? t1 : h1;
        int other2 = (h1 == t2) ? h2 : t2;
        return g.adjacent(other1, other2) ? 0 : -1;
    }
    return 0;
}

}  // namespace

HelmholtzianMatrix build_H_direct(const Graph& g, const Orientation& o) {
    if (g.m() == 0) throw std::invalid_argument("build_H_direct: graph has no edges");
    const std::size_t m = g.m();
    HelmholtzianMatrix h{IntMatrix(m, m), HelmholtzianBuild::direct};
    for (std::size_t e = 0; e < m; ++e)
        h.mat.at(e, e) = BigInt(static_cast<long long>(triangle_degree_edge(g, e)) + 2);
    for (std::size_t e1 = 0; e1 < m; ++e1)
        for (std::size_t e2 = e1 + 1; e2 < m; ++e2) {
            int v = pair_entry(g, o, e1, e2);
            if (v != 0) {
                h.mat.at(e1, e2) = BigInt(v);
                h.mat.at(e2, e1) = BigInt(v);
            }
        }
    return h;
}

HelmholtzianMatrix build_H_factored(const Graph& g, const Orientation& o) {
    if (g.m() == 0) throw std::invalid_argument("build_H_factored: graph has no edges");
    IntMatrix B = build_B(g, o);
    IntMatrix C = build_C(g, o);
    return {B * B.transposed() + C.transposed() * C, HelmholtzianBuild::factored};
}

SignedLoopGraph build_signed_loop_graph(const Graph& g, const Orientation& o) {
    if (g.m() == 0) throw std::invalid_argument("build_signed_loop_graph: graph has no edges");
    SignedLoopGraph slg;
    slg.m = g.m();
    slg.loops.resize(slg.m);
    for (std::size_t e = 0; e < slg.m; ++e) slg.loops[e] = triangle_degree_edge(g, e) + 2;
    for (std::size_t e1 = 0; e1 < slg.m; ++e1)
        for (std::size_t e2 = e1 + 1; e2 < slg.m; ++e2) {
            int v = pair_entry(g, o, e1, e2);
            if (v > 0) slg.pos_edges.emplace_back(e1, e2);
            else if (v < 0) slg.neg_edges.emplace_back(e1, e2);
        }
    return slg;
}

IntMatrix SignedLoopGraph::reduced_adjacency() const {
    IntMatrix a(m, m);
    for (const auto& [i, j] : pos_edges) {
        a.at(i, j) = BigInt(1);
        a.at(j, i) = BigInt(1);
    }
    for (const auto& [i, j] : neg_edges) {
        a.at(i, j) = BigInt(-1);
        a.at(j, i) = BigInt(-1);
    }
    return a;
}

IntMatrix SignedLoopGraph::loop_diagonal() const {
    IntMatrix d(m, m);
    for (std::size_t i = 0; i < m; ++i) d.at(i, i) = BigInt(static_cast<long long>(loops[i]));
    return d;
}

IntMatrix SignedLoopGraph::adjacency() const {
    IntMatrix a = reduced_adjacency();
    for (std::size_t i = 0; i < m; ++i) a.at(i, i) = BigInt(static_cast<long long>(loops[i]));
    return a;
}

HelmholtzianMatrix build_H_split(const SignedLoopGraph& slg) {
    return {slg.reduced_adjacency() + slg.loop_diagonal(), HelmholtzianBuild::split};
}

QuadraticFormValue quadratic_form(const HelmholtzianMatrix& h, std::span<const double> x) {
    const std::size_t m = h.m();
    if (x.size() != m) throw std::invalid_argument("quadratic_form: dimension mismatch");

    std::vector<double> hd = h.mat.to_double();
    double via_matrix = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) via_matrix += x[i] * hd[i * m + j] * x[j];

    // The matrix itself encodes the pair classification: Delta(e) = h_ee - 2
    // and d(e+) + d(e-) = (#nonzero off-diagonals in row e) + 2 + 2*Delta(e).
    double via_comb = 0.0;
    for (std::size_t e = 0; e < m; ++e) {
        double delta = hd[e * m + e] - 2.0;
        std::size_t nnz = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (j != e && hd[e * m + j] != 0.0) ++nnz;
        double deg_sum = static_cast<double>(nnz) + 2.0 + 2.0 * delta;
        via_comb += (3.0 * delta + 4.0 - deg_sum) * x[e] * x[e];
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            double v = hd[i * m + j];
            if (v < 0.0) via_comb += (x[i] - x[j]) * (x[i] - x[j]);
            else if (v > 0.0) via_comb += (x[i] + x[j]) * (x[i] + x[j]);
        }

    double scale = std::max({1.0, std::abs(via_matrix), std::abs(via_comb)});
    if (std::abs(via_matrix - via_comb) > 1e-9 * scale)
        throw std::logic_error("quadratic_form: matrix and combinatorial values disagree");
    return {via_matrix, via_comb};
}

}  // namespace hodge
