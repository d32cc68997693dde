#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "hodge/families.hpp"
#include "hodge/spectral.hpp"
#include "support/corpus.hpp"

using namespace hodge;
namespace ts = hodge::testsupport;

namespace {

HelmholtzianMatrix direct_of(const Graph& g) {
    return build_H_direct(g, canonical_orientation(g));
}

// Fraction-free determinant, independent of the Berkowitz code path.
BigInt bareiss_det(IntMatrix w) {
    const std::size_t n = w.rows();
    BigInt prev(1);
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && w.at(piv, col).is_zero()) ++piv;
        if (piv == n) return BigInt(0);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(col, j), w.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = col + 1; i < n; ++i)
            for (std::size_t j = col + 1; j < n; ++j)
                w.at(i, j) = (w.at(col, col) * w.at(i, j) - w.at(i, col) * w.at(col, j))
                                 .div_exact(prev);
        prev = w.at(col, col);
    }
    BigInt det = w.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

std::vector<long long> expected_charpoly_p3() { return {1, -4, 3}; }

}  // namespace

TEST_CASE("charpoly of K3 and P3") {
    CharPoly k3 = charpoly_exact(direct_of(ts::complete_graph_t(3)));
    std::vector<long long> want{1, -9, 27, -27};
    REQUIRE(k3.coeffs.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(k3.coeffs[i].to_int64() == want[i]);

    CharPoly p3 = charpoly_exact(direct_of(ts::path_graph(3)));
    auto wantp = expected_charpoly_p3();
    for (std::size_t i = 0; i < wantp.size(); ++i) CHECK(p3.coeffs[i].to_int64() == wantp[i]);
}

TEST_CASE("charpoly of the worked example") {
    CharPoly p = charpoly_exact(
        build_H_direct(ts::worked_example_graph(), ts::worked_example_orientation()));
    auto want = ts::worked_example_charpoly();
    REQUIRE(p.coeffs.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(p.coeffs[i].to_int64() == want[i]);
    CHECK(p.trailing_zeros() == 1);
}

TEST_CASE("charpoly evaluation equals the shifted determinant") {
    std::mt19937_64 rng(53);
    for (int iter = 0; iter < 25; ++iter) {
        std::size_t n = 1 + rng() % 6;
        IntMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                BigInt v(static_cast<long long>(rng() % 11) - 5);
                a.at(i, j) = v;
                a.at(j, i) = v;
            }
        CharPoly p = charpoly_of(a);
        for (long long x = -2; x <= 3; ++x) {
            IntMatrix shifted = a;
            for (std::size_t i = 0; i < n; ++i)
                shifted.at(i, i) = BigInt(x) - a.at(i, i);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j) shifted.at(i, j) = -a.at(i, j);
            CHECK(poly_eval(p.coeffs, BigInt(x)) == bareiss_det(shifted));
        }
    }
}

TEST_CASE("polynomial helpers") {
    // (x+1)^2 shifted by -1 gives x^2
    std::vector<BigInt> p{BigInt(1), BigInt(2), BigInt(1)};
    auto shifted = poly_compose_shift(p, -1);
    CHECK(shifted == std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(0)});
    auto deriv = poly_derivative(p);
    CHECK(deriv == std::vector<BigInt>{BigInt(2), BigInt(2)});
    auto prod = poly_mul({BigInt(1), BigInt(-1)}, {BigInt(1), BigInt(1)});
    CHECK(prod == std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(-1)});
}

TEST_CASE("eigen_spectrum on closed forms") {
    Spectrum k4 = eigen_spectrum(direct_of(ts::complete_graph_t(4)));
    REQUIRE(k4.entries.size() == 1);
    CHECK(k4.entries[0].value == doctest::Approx(4.0));
    CHECK(k4.entries[0].multiplicity == 6);

    Spectrum p3 = eigen_spectrum(direct_of(ts::path_graph(3)));
    REQUIRE(p3.entries.size() == 2);
    CHECK(p3.entries[0].value == doctest::Approx(3.0));
    CHECK(p3.entries[1].value == doctest::Approx(1.0));

    CHECK_THROWS_AS(eigen_spectrum(direct_of(ts::path_graph(3)), -1.0), std::invalid_argument);
}

TEST_CASE("worked example spectrum matches its polynomial") {
    HelmholtzianMatrix h =
        build_H_direct(ts::worked_example_graph(), ts::worked_example_orientation());
    Spectrum sp = eigen_spectrum(h);
    CHECK(sp.total_multiplicity() == 9);
    std::size_t zero_mult = 0;
    for (const auto& e : sp.entries)
        if (std::abs(e.value) < 1e-8) zero_mult += e.multiplicity;
    CHECK(zero_mult == 1);
    CHECK(eigenvalues_match_charpoly_roots(charpoly_exact(h), sp));
}

TEST_CASE("nullity by exact rank") {
    for (int n : {2, 3, 5, 8}) {
        Graph t = ts::star_graph(n);
        CHECK(nullity_rank(t, canonical_orientation(t)) == 0);
    }
    Graph c4 = ts::cycle_graph(4);
    CHECK(nullity_rank(c4, canonical_orientation(c4)) == 1);
    Graph k4 = ts::complete_graph_t(4);
    CHECK(nullity_rank(k4, canonical_orientation(k4)) == 0);
}

TEST_CASE("nullity formula and its validity flag") {
    auto c4 = nullity_formula(ts::cycle_graph(4));
    CHECK(c4.value == 1);
    CHECK(c4.valid);

    auto wx = nullity_formula(ts::worked_example_graph());
    CHECK(wx.value == 1);
    CHECK(wx.valid);

    auto k4 = nullity_formula(ts::complete_graph_t(4));
    CHECK(k4.value == -1);
    CHECK(!k4.valid);  // rank(C) = 3 < t = 4

    Graph octahedron = gen_family(FamilySpec::parse("multipartite:2,2,2"));
    auto oct = nullity_formula(octahedron);
    CHECK(oct.value == -1);
    CHECK(!oct.valid);
    CHECK(nullity_rank(octahedron, canonical_orientation(octahedron)) == 0);
}

TEST_CASE("triangle count from nullity") {
    auto wx = triangles_from_nullity(ts::worked_example_graph());
    CHECK(wx.value == 1);
    CHECK(wx.valid);
    auto tree = triangles_from_nullity(ts::path_graph(6));
    CHECK(tree.value == 0);
    CHECK(tree.valid);
    auto k4 = triangles_from_nullity(ts::complete_graph_t(4));
    CHECK(k4.value == 3);
    CHECK(!k4.valid);
}

TEST_CASE("least eigenvalue bounds") {
    Graph k5 = ts::complete_graph_t(5);
    auto b5 = least_eigenvalue_bounds(k5, direct_of(k5));
    CHECK(b5.bound_i == 5);
    CHECK(b5.bound_i_attained);
    CHECK(!b5.bound_ii.has_value());

    Graph p3 = ts::path_graph(3);
    auto bp = least_eigenvalue_bounds(p3, direct_of(p3));
    CHECK(bp.bound_i == 2);
    REQUIRE(bp.bound_ii.has_value());
    CHECK(*bp.bound_ii == doctest::Approx(1.0));
    CHECK(bp.lambda_min == doctest::Approx(1.0));
    CHECK(!bp.bound_i_attained);

    Graph c4 = ts::cycle_graph(4);
    auto bc = least_eigenvalue_bounds(c4, direct_of(c4));
    CHECK(bc.bound_i == 2);
    CHECK(*bc.bound_ii == doctest::Approx(1.0));
    CHECK(bc.lambda_min == doctest::Approx(0.0));

    Graph disconnected(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(least_eigenvalue_bounds(disconnected, direct_of(disconnected)),
                    std::invalid_argument);
}

TEST_CASE("spectral projectors") {
    Graph k3 = ts::complete_graph_t(3);
    auto pk = spectral_projectors(direct_of(k3), eigen_spectrum(direct_of(k3)));
    REQUIRE(pk.size() == 1);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(pk[0][i * 3 + j] == doctest::Approx(i == j ? 1.0 : 0.0));

    Graph p3 = ts::path_graph(3);
    auto pp = spectral_projectors(direct_of(p3), eigen_spectrum(direct_of(p3)));
    REQUIRE(pp.size() == 2);
    CHECK(pp[0][0] == doctest::Approx(0.5));
    CHECK(pp[0][1] == doctest::Approx(-0.5));
    CHECK(pp[1][0] == doctest::Approx(0.5));
    CHECK(pp[1][1] == doctest::Approx(0.5));

    Graph split = gen_family(FamilySpec::parse("split:3,2"));  // K_2 v 3K_1
    auto ps = spectral_projectors(direct_of(split), eigen_spectrum(direct_of(split)));
    REQUIRE(ps.size() == 2);
    double tr0 = 0.0, tr1 = 0.0;
    std::size_t m = split.m();
    for (std::size_t d = 0; d < m; ++d) {
        tr0 += ps[0][d * m + d];
        tr1 += ps[1][d * m + d];
    }
    CHECK(tr0 == doctest::Approx(3.0));  // C(t+1,2) with t=2
    CHECK(tr1 == doctest::Approx(4.0));  // (s-1)t with s=3
}

TEST_CASE("projectors agree with the explicit matrix polynomial at small s") {
    // The raw product prod (H - l_j I) / (l_i - l_j) is well conditioned for a
    // handful of nodes; it must agree with the operation's stable evaluation.
    std::mt19937_64 rng(73);
    for (int iter = 0; iter < 12; ++iter) {
        Graph g = ts::random_graph(rng, 3 + static_cast<int>(rng() % 4), 2 + rng() % 7);
        HelmholtzianMatrix h = direct_of(g);
        Spectrum sp = eigen_spectrum(h);
        if (sp.distinct() > 8) continue;
        std::vector<std::vector<double>> stable;
        try {
            stable = spectral_projectors(h, sp);
        } catch (const std::runtime_error&) {
            continue;  // ill-conditioned gap, nothing to compare
        }
        const std::size_t m = g.m();
        std::vector<double> hd = h.mat.to_double();
        for (std::size_t i = 0; i < sp.entries.size(); ++i) {
            std::vector<double> p(m * m, 0.0);
            for (std::size_t d = 0; d < m; ++d) p[d * m + d] = 1.0;
            for (std::size_t j = 0; j < sp.entries.size(); ++j) {
                if (j == i) continue;
                double lj = sp.entries[j].value;
                double denom = sp.entries[i].value - lj;
                std::vector<double> next(m * m, 0.0);
                for (std::size_t r = 0; r < m; ++r)
                    for (std::size_t k = 0; k < m; ++k)
                        for (std::size_t c = 0; c < m; ++c)
                            next[r * m + c] += p[r * m + k] * (hd[k * m + c] - (k == c ? lj : 0.0));
                for (double& x : next) x /= denom;
                p = std::move(next);
            }
            for (std::size_t k = 0; k < m * m; ++k)
                CHECK(p[k] == doctest::Approx(stable[i][k]).epsilon(1e-7).scale(1.0));
        }
    }
}

TEST_CASE("projector gap guard") {
    Graph p3 = ts::path_graph(3);
    HelmholtzianMatrix h = direct_of(p3);
    Spectrum doctored;
    doctored.kind = Spectrum::Kind::clustered_float;
    doctored.entries = {{3.0, 1}, {3.0 - 5e-8 * 3.0, 1}};
    CHECK_THROWS_AS(spectral_projectors(h, doctored), std::runtime_error);
}

TEST_CASE("coarse clustering merges but cannot fake integrality") {
    Graph p4 = ts::path_graph(4);
    HelmholtzianMatrix h = direct_of(p4);
    // huge tolerance fuses everything into one cluster...
    Spectrum coarse = eigen_spectrum(h, 10.0);
    CHECK(coarse.distinct() == 1);
    // ...but the exact confirmation still rejects the rounded spectrum
    CHECK(!h_integral_test(h, 10.0).is_integral);
    CHECK(!h_integral_test(h).is_integral);  // 2 +- sqrt(2) are not integers
}

TEST_CASE("distinct count and diameter") {
    Graph k6 = ts::complete_graph_t(6);
    auto rk = distinct_count_and_diameter_check(k6, eigen_spectrum(direct_of(k6)));
    CHECK(rk.distinct == 1);
    CHECK(rk.diam == 1);
    CHECK(rk.diameter_le_distinct);
    CHECK(rk.one_eigenvalue_iff_complete);
    CHECK(rk.two_eigenvalues_iff_complete_split);

    Graph split = gen_family(FamilySpec::parse("split:4,2"));  // K_2 v 4K_1
    auto rs = distinct_count_and_diameter_check(split, eigen_spectrum(direct_of(split)));
    CHECK(rs.distinct == 2);
    CHECK(rs.diam == 2);
    CHECK(rs.diameter_le_distinct);
    CHECK(rs.two_eigenvalues_iff_complete_split);

    Graph p4 = ts::path_graph(4);
    auto rp = distinct_count_and_diameter_check(p4, eigen_spectrum(direct_of(p4)));
    CHECK(rp.diam == 3);
    CHECK(rp.diameter_le_distinct);
}

TEST_CASE("h-integral confirmation") {
    auto wx = h_integral_test(
        build_H_direct(ts::worked_example_graph(), ts::worked_example_orientation()));
    CHECK(!wx.is_integral);

    Graph thr = gen_family(FamilySpec::parse("threshold:001101"));
    auto rt = h_integral_test(direct_of(thr));
    REQUIRE(rt.is_integral);
    Spectrum want = Spectrum::exact({6, 5, 5, 5, 5, 5, 3, 3, 3, 1});
    CHECK(ts::spectra_match(want, *rt.spectrum, 0.0));

    Graph k23 = gen_family(FamilySpec::parse("multipartite:2,3"));
    auto rb = h_integral_test(direct_of(k23));
    REQUIRE(rb.is_integral);
    Spectrum wantb = Spectrum::exact({5, 3, 2, 2, 0, 0});
    CHECK(ts::spectra_match(wantb, *rb.spectrum, 0.0));
}

TEST_CASE("krylov moment rank equals the distinct count") {
    std::mt19937_64 rng(59);
    for (int iter = 0; iter < 12; ++iter) {
        Graph g = ts::random_graph(rng, 3 + static_cast<int>(rng() % 5), 2 + rng() % 8);
        HelmholtzianMatrix h = direct_of(g);
        Spectrum sp = eigen_spectrum(h);
        CHECK(krylov_moment_rank(h, sp.distinct()) == sp.distinct());
    }
}

namespace {

Graph remove_vertex(const Graph& g, int victim) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges()) {
        if (u == victim || v == victim) continue;
        edges.emplace_back(u > victim ? u - 1 : u, v > victim ? v - 1 : v);
    }
    return Graph(g.n() - 1, std::move(edges));
}

Graph contract_edge(const Graph& g, std::size_t e) {
    auto [a, b] = g.edge(e);
    int lo = std::min(a, b), hi = std::max(a, b);
    std::vector<std::pair<int, int>> edges;
    auto remap = [&](int v) {
        if (v == hi) v = lo;
        return v > hi ? v - 1 : v;
    };
    for (std::size_t i = 0; i < g.m(); ++i) {
        if (i == e) continue;
        edges.emplace_back(remap(g.edge(i).first), remap(g.edge(i).second));
    }
    return Graph(g.n() - 1, std::move(edges));
}

std::size_t nullity_of(const Graph& g) {
    return g.m() == 0 ? 0 : nullity_rank(g, canonical_orientation(g));
}

}  // namespace

TEST_CASE("deleting a pendant vertex preserves the nullity") {
    std::mt19937_64 rng(79);
    int tested = 0;
    while (tested < 25) {
        Graph g = ts::random_graph(rng, 3 + static_cast<int>(rng() % 8), 2 + rng() % 12);
        int pendant = -1;
        for (int v = 0; v < g.n(); ++v)
            if (g.degree(v) == 1) pendant = v;
        if (pendant < 0) continue;
        CHECK(nullity_of(g) == nullity_of(remove_vertex(g, pendant)));
        ++tested;
    }
}

TEST_CASE("contracting a cut-edge preserves the nullity") {
    std::mt19937_64 rng(83);
    int tested = 0;
    while (tested < 25) {
        Graph g = ts::random_graph(rng, 4 + static_cast<int>(rng() % 6), 3 + rng() % 10);
        std::ptrdiff_t cut = -1;
        std::size_t before = components(g).count;
        for (std::size_t e = 0; e < g.m() && cut < 0; ++e) {
            std::vector<std::pair<int, int>> reduced = g.edges();
            reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(e));
            if (components(Graph(g.n(), std::move(reduced))).count > before)
                cut = static_cast<std::ptrdiff_t>(e);
        }
        if (cut < 0) continue;
        Graph contracted = contract_edge(g, static_cast<std::size_t>(cut));
        CHECK(nullity_of(g) == nullity_of(contracted));
        ++tested;
    }
}

TEST_CASE("null vectors annihilate both incidence factors") {
    Graph c4 = ts::cycle_graph(4);
    Orientation o = canonical_orientation(c4);
    auto nv = null_vectors(build_H_direct(c4, o));
    REQUIRE(nv.size() == 1);
    IntMatrix b = build_B(c4, o);
    auto bd = b.to_double();
    for (int v = 0; v < 4; ++v) {
        double s = 0.0;
        for (std::size_t e = 0; e < 4; ++e) s += bd[e * 4 + v] * nv[0][e];
        CHECK(std::abs(s) < 1e-8);
    }
}
