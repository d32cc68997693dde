#include "hodge/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hodge {

std::size_t Spectrum::total_multiplicity() const {
    std::size_t t = 0;
    for (const auto& e : entries) t += e.multiplicity;
    return t;
}

Spectrum Spectrum::exact(std::vector<long long> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    Spectrum sp;
    sp.kind = Kind::exact_integer;
    for (long long v : values) {
        if (!sp.entries.empty() && static_cast<long long>(sp.entries.back().value) == v)
            ++sp.entries.back().multiplicity;
        else
            sp.entries.push_back({static_cast<double>(v), 1});
    }
    return sp;
}

std::size_t CharPoly::trailing_zeros() const {
    std::size_t z = 0;
    for (std::size_t i = coeffs.size(); i-- > 0 && coeffs[i].is_zero();) ++z;
    return z;
}

BigInt poly_eval(const std::vector<BigInt>& coeffs, const BigInt& x) {
    BigInt acc;
    for (const auto& c : coeffs) {
        acc *= x;
        acc += c;
    }
    return acc;
}

double poly_eval_double(const std::vector<BigInt>& coeffs, double x) {
    double acc = 0.0;
    for (const auto& c : coeffs) acc = acc * x + c.to_double();
    return acc;
}

std::vector<BigInt> poly_derivative(const std::vector<BigInt>& coeffs) {
    if (coeffs.size() <= 1) return {};
    std::vector<BigInt> d(coeffs.size() - 1);
    const long long deg = static_cast<long long>(coeffs.size()) - 1;
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i)
        d[i] = coeffs[i] * BigInt(deg - static_cast<long long>(i));
    return d;
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<BigInt> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j].add_mul(a[i], b[j]);
    }
    return r;
}

std::vector<BigInt> poly_compose_shift(const std::vector<BigInt>& coeffs, long long s) {
    // Horner over polynomials: acc(lambda) <- acc * (lambda + s) + c_i.
    std::vector<BigInt> acc;
    const BigInt shift(s);
    for (const auto& c : coeffs) {
        std::vector<BigInt> next(acc.size() + 1);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i] += acc[i];
            next[i + 1].add_mul(acc[i], shift);
        }
        next.back() += c;
        acc = std::move(next);
    }
    return acc;
}

CharPoly charpoly_of(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("charpoly_of: square matrix required");
    const std::size_t n = a.rows();
    // Berkowitz: fold principal submatrices one row/column at a time through
    // Toeplitz products; division-free over exact integers.
    std::vector<BigInt> c{BigInt(1)};
    for (std::size_t r = 1; r <= n; ++r) {
        std::vector<BigInt> q(r + 1);
        q[0] = BigInt(1);
        q[1] = -a.at(r - 1, r - 1);
        if (r >= 2) {
            std::vector<BigInt> vec(r - 1);
            for (std::size_t i = 0; i + 1 < r; ++i) vec[i] = a.at(i, r - 1);
            for (std::size_t k = 2; k <= r; ++k) {
                BigInt dot;
                for (std::size_t i = 0; i + 1 < r; ++i) dot.add_mul(a.at(r - 1, i), vec[i]);
                q[k] = -dot;
                if (k < r) {
                    std::vector<BigInt> next(r - 1);
                    for (std::size_t i = 0; i + 1 < r; ++i)
                        for (std::size_t j = 0; j + 1 < r; ++j)
                            next[i].add_mul(a.at(i, j), vec[j]);
                    vec = std::move(next);
                }
            }
        }
        std::vector<BigInt> nc(r + 1);
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t t = 0; t <= i && t <= r; ++t) {
                std::size_t j = i - t;
                if (j < c.size()) nc[i].add_mul(q[t], c[j]);
            }
        c = std::move(nc);
    }
    return CharPoly{std::move(c)};
}

CharPoly charpoly_exact(const HelmholtzianMatrix& h) {
    if (h.m() == 0) throw std::invalid_argument("charpoly_exact: empty matrix");
    return charpoly_of(h.mat);
}

namespace {

SymEigen solve_eigen(const HelmholtzianMatrix& h) {
    if (h.m() == 0) throw std::invalid_argument("eigen_spectrum: dimension 0");
    if (!h.mat.is_symmetric()) throw std::invalid_argument("eigen_spectrum: matrix not symmetric");
    const std::size_t m = h.m();
    std::vector<double> a = h.mat.to_double();
    SymEigen eig = sym_eigen(a, m);

    double frob = 0.0;
    for (double x : a) frob += x * x;
    frob = std::sqrt(frob);
    for (std::size_t k = 0; k < m; ++k) {
        double res = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double hx = 0.0;
            for (std::size_t j = 0; j < m; ++j) hx += a[i * m + j] * eig.vectors[k][j];
            double d = hx - eig.values[k] * eig.vectors[k][i];
            res += d * d;
        }
        if (std::sqrt(res) > 1e-9 * std::max(1.0, frob))
            throw std::runtime_error("eigen_spectrum: eigenpair residual too large");
    }
    return eig;
}

Spectrum cluster_values(const std::vector<double>& values, double cluster_tol) {
    if (cluster_tol <= 0.0) throw std::invalid_argument("eigen_spectrum: cluster_tol must be positive");
    const double scale = std::max(1.0, values.front());
    if (values.back() < -1e-8 * scale)
        throw std::logic_error("eigen_spectrum: negative eigenvalue beyond tolerance");

    Spectrum sp;
    sp.kind = Spectrum::Kind::clustered_float;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= values.size(); ++i) {
        if (i == values.size() || values[i - 1] - values[i] > cluster_tol * scale) {
            double mean = 0.0;
            for (std::size_t j = start; j < i; ++j) mean += values[j];
            mean /= static_cast<double>(i - start);
            sp.entries.push_back({mean, i - start});
            start = i;
        }
    }
    return sp;
}

}  // namespace

Spectrum eigen_spectrum(const HelmholtzianMatrix& h, double cluster_tol) {
    SymEigen eig = solve_eigen(h);
    return cluster_values(eig.values, cluster_tol);
}

std::vector<std::vector<double>> null_vectors(const HelmholtzianMatrix& h, double tol) {
    SymEigen eig = solve_eigen(h);
    const double scale = std::max(1.0, eig.values.front());
    std::vector<std::vector<double>> out;
    for (std::size_t k = 0; k < eig.values.size(); ++k)
        if (std::abs(eig.values[k]) <= tol * scale) out.push_back(eig.vectors[k]);
    return out;
}

std::size_t nullity_rank(const Graph& g, const Orientation& o) {
    if (g.m() == 0) throw std::invalid_argument("nullity_rank: graph has no edges");
    IntMatrix bt = build_B(g, o).transposed();
    IntMatrix c = build_C(g, o);
    return g.m() - exact_rank(bt.vstack(c));
}

FlaggedCount nullity_formula(const Graph& g) {
    if (g.m() == 0) throw std::invalid_argument("nullity_formula: graph has no edges");
    const auto t = enumerate_triangles(g).size();
    const auto w = components(g).count;
    Orientation o = canonical_orientation(g);
    bool valid = exact_rank(build_C(g, o)) == t;
    long long value = static_cast<long long>(g.m()) - g.n() - static_cast<long long>(t) +
                      static_cast<long long>(w);
    return {value, valid};
}

FlaggedCount triangles_from_nullity(const Graph& g) {
    if (g.m() == 0) throw std::invalid_argument("triangles_from_nullity: graph has no edges");
    Orientation o = canonical_orientation(g);
    const auto t = enumerate_triangles(g).size();
    const auto w = components(g).count;
    const auto eta = nullity_rank(g, o);
    bool valid = exact_rank(build_C(g, o)) == t;
    long long value = static_cast<long long>(g.m()) - g.n() - static_cast<long long>(eta) +
                      static_cast<long long>(w);
    return {value, valid};
}

LeastEigenvalueBounds least_eigenvalue_bounds(const Graph& g, const HelmholtzianMatrix& h) {
    if (components(g).count != 1)
        throw std::invalid_argument("least_eigenvalue_bounds: graph must be connected");
    if (g.m() != h.m()) throw std::invalid_argument("least_eigenvalue_bounds: size mismatch");

    std::vector<std::size_t> delta(g.m());
    long long bound_i = -1;
    for (std::size_t e = 0; e < g.m(); ++e) {
        delta[e] = triangle_degree_edge(g, e);
        long long v = static_cast<long long>(delta[e]) + 2;
        if (bound_i < 0 || v < bound_i) bound_i = v;
    }

    std::optional<double> bound_ii;
    for (int v = 0; v < g.n(); ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (g.adjacent(nb[a], nb[b])) continue;  // induced P3 only
                std::size_t ei = *g.edge_index(v, nb[a]);
                std::size_t ej = *g.edge_index(v, nb[b]);
                double cand = static_cast<double>(delta[ei] + delta[ej]) / 2.0 + 1.0;
                if (!bound_ii || cand < *bound_ii) bound_ii = cand;
            }
    }

    SymEigen eig = solve_eigen(h);
    const double lambda_min = eig.values.back();
    const double tol = 1e-8 * std::max(1.0, eig.values.front());

    if (lambda_min > static_cast<double>(bound_i) + tol)
        throw std::logic_error("least_eigenvalue_bounds: bound (i) violated");
    if (bound_ii && lambda_min > *bound_ii + tol)
        throw std::logic_error("least_eigenvalue_bounds: bound (ii) violated");

    bool attained = std::abs(lambda_min - static_cast<double>(bound_i)) <= tol;
    if (attained != g.is_complete())
        throw std::logic_error("least_eigenvalue_bounds: equality case mismatch");
    if (g.is_complete() && bound_ii)
        throw std::logic_error("least_eigenvalue_bounds: induced P3 in a complete graph");

    return {bound_i, attained, bound_ii, lambda_min};
}

std::vector<std::vector<double>> spectral_projectors(const HelmholtzianMatrix& h,
                                                     const Spectrum& sp, double cluster_tol) {
    const std::size_t m = h.m();
    if (sp.total_multiplicity() != m)
        throw std::invalid_argument("spectral_projectors: spectrum does not match matrix");
    const double scale = std::max(1.0, sp.entries.front().value);
    for (std::size_t i = 0; i + 1 < sp.entries.size(); ++i)
        if (sp.entries[i].value - sp.entries[i + 1].value < 10.0 * cluster_tol * scale)
            throw std::runtime_error("spectral_projectors: eigenvalues too close, projector ill-conditioned");

    // P_i = f_i(H) with f_i the Lagrange polynomial through the cluster
    // values, applied through the eigendecomposition with the exact node
    // values f_i(lambda_j) = delta_ij. Evaluating the product numerically is
    // unusable here: a raw eigenvalue sits ~1e-15 from its cluster value and
    // f_i amplifies that offset by the product of inverse gaps, which already
    // reaches 1e12 around 25 distinct eigenvalues.
    SymEigen eig = solve_eigen(h);
    std::vector<std::size_t> count(sp.entries.size(), 0);
    std::vector<std::size_t> owner(m);
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < sp.entries.size(); ++j)
            if (std::abs(eig.values[k] - sp.entries[j].value) <
                std::abs(eig.values[k] - sp.entries[best].value))
                best = j;
        owner[k] = best;
        ++count[best];
    }
    for (std::size_t j = 0; j < sp.entries.size(); ++j)
        if (count[j] != sp.entries[j].multiplicity)
            throw std::invalid_argument("spectral_projectors: spectrum does not match matrix");

    std::vector<std::vector<double>> out;
    out.reserve(sp.entries.size());
    for (std::size_t i = 0; i < sp.entries.size(); ++i) {
        std::vector<double> p(m * m, 0.0);
        for (std::size_t k = 0; k < m; ++k) {
            if (owner[k] != i) continue;
            for (std::size_t r = 0; r < m; ++r) {
                double x = eig.vectors[k][r];
                if (x == 0.0) continue;
                for (std::size_t c = 0; c < m; ++c) p[r * m + c] += x * eig.vectors[k][c];
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

bool is_complete_split(const Graph& g) {
    const int n = g.n();
    int t = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) ++t;
    int s = n - t;
    if (t < 1 || s < 2) return false;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) continue;
        if (g.degree(v) != t) return false;
        for (int w : g.neighbors(v))
            if (g.degree(w) != n - 1) return false;
    }
    return true;
}

DistinctDiameterCheck distinct_count_and_diameter_check(const Graph& g, const Spectrum& sp) {
    auto diam = diameter(g);
    if (!diam) throw std::invalid_argument("distinct_count_and_diameter_check: graph must be connected");
    DistinctDiameterCheck r{};
    r.distinct = sp.distinct();
    r.diam = *diam;
    r.diameter_le_distinct = r.diam <= r.distinct;
    r.one_eigenvalue_iff_complete = (r.distinct == 1) == g.is_complete();
    r.two_eigenvalues_iff_complete_split = (r.distinct == 2) == is_complete_split(g);
    return r;
}

HIntegralResult integer_spectrum_confirm(const IntMatrix& sym, double cluster_tol) {
    if (sym.rows() == 0) return {true, Spectrum::exact({})};
    if (cluster_tol <= 0.0) throw std::invalid_argument("integer_spectrum_confirm: cluster_tol must be positive");
    SymEigen eig = sym_eigen(sym.to_double(), sym.rows());

    // Greedy descending clustering (no sign constraint: callers may pass any
    // symmetric matrix), then one rounded integer per cluster.
    const double scale = std::max(1.0, std::abs(eig.values.front()));
    std::vector<long long> roots;
    roots.reserve(eig.values.size());
    std::size_t start = 0;
    for (std::size_t i = 1; i <= eig.values.size(); ++i) {
        if (i == eig.values.size() || eig.values[i - 1] - eig.values[i] > cluster_tol * scale) {
            double mean = 0.0;
            for (std::size_t j = start; j < i; ++j) mean += eig.values[j];
            mean /= static_cast<double>(i - start);
            for (std::size_t j = start; j < i; ++j) roots.push_back(std::llround(mean));
            start = i;
        }
    }

    std::vector<BigInt> expansion{BigInt(1)};
    for (long long r : roots) expansion = poly_mul(expansion, {BigInt(1), BigInt(-r)});

    CharPoly p = charpoly_of(sym);
    bool ok = expansion == p.coeffs;
    HIntegralResult res{ok, std::nullopt};
    if (ok) res.spectrum = Spectrum::exact(std::move(roots));
    return res;
}

HIntegralResult h_integral_test(const HelmholtzianMatrix& h, double cluster_tol) {
    if (h.m() == 0) throw std::invalid_argument("h_integral_test: empty matrix");
    return integer_spectrum_confirm(h.mat, cluster_tol);
}

namespace {

// Power sums of the roots from the coefficients (Newton's identities).
std::vector<BigInt> power_traces(const CharPoly& p, std::size_t upto) {
    const std::size_t m = p.degree();
    std::vector<BigInt> tr(upto + 1);
    tr[0] = BigInt(static_cast<long long>(m));
    for (std::size_t k = 1; k <= upto; ++k) {
        BigInt acc;
        for (std::size_t i = 1; i < k && i <= m; ++i) acc.add_mul(p.coeffs[i], tr[k - i]);
        if (k <= m) acc += BigInt(static_cast<long long>(k)) * p.coeffs[k];
        tr[k] = -acc;
    }
    return tr;
}

}  // namespace

std::size_t krylov_moment_rank(const HelmholtzianMatrix& h, std::size_t s) {
    CharPoly p = charpoly_exact(h);
    std::vector<BigInt> tr = power_traces(p, 2 * s);
    IntMatrix hankel(s + 1, s + 1);
    for (std::size_t i = 0; i <= s; ++i)
        for (std::size_t j = 0; j <= s; ++j) hankel.at(i, j) = tr[i + j];
    return exact_rank(hankel);
}

bool eigenvalues_match_charpoly_roots(const CharPoly& p, const Spectrum& sp) {
    const double scale = std::max(1.0, sp.entries.front().value);
    const double delta = 1e-8 * scale;
    for (const auto& e : sp.entries) {
        std::vector<BigInt> d = p.coeffs;
        for (std::size_t k = 1; k < e.multiplicity; ++k) d = poly_derivative(d);
        double lo = poly_eval_double(d, e.value - delta);
        double hi = poly_eval_double(d, e.value + delta);
        bool sign_change = lo == 0.0 || hi == 0.0 || (lo < 0.0) != (hi < 0.0);
        if (sign_change) continue;
        // Fallback: relative residual of p itself at the cluster value.
        double num = std::abs(poly_eval_double(p.coeffs, e.value));
        double mag = 0.0;
        for (const auto& c : p.coeffs) mag = mag * std::abs(e.value) + std::abs(c.to_double());
        if (num > 1e-6 * std::max(1.0, mag)) return false;
    }
    return true;
}

}  // namespace hodge
