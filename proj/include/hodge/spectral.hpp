#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hodge/graph.hpp"
#include "hodge/helmholtzian.hpp"
#include "hodge/incidence.hpp"
#include "hodge/int_matrix.hpp"
#include "hodge/sym_eigen.hpp"

namespace hodge {

/// Multiset of (eigenvalue, multiplicity) pairs, values strictly decreasing.
struct Spectrum {
    enum class Kind { exact_integer, clustered_float };
    struct Entry {
        double value;
        std::size_t multiplicity;
    };
    Kind kind = Kind::clustered_float;
    std::vector<Entry> entries;

    std::size_t total_multiplicity() const;
    std::size_t distinct() const { return entries.size(); }

    /// Builds an exact-integer spectrum from a multiset of values.
    static Spectrum exact(std::vector<long long> values);
};

/// Exact characteristic polynomial det(lambda*I - H):
/// coeffs[0] = 1, then c_1 ... c_m, descending powers.
struct CharPoly {
    std::vector<BigInt> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    std::size_t trailing_zeros() const;
};

// --- exact polynomial helpers (coefficients descending) ---

BigInt poly_eval(const std::vector<BigInt>& coeffs, const BigInt& x);
double poly_eval_double(const std::vector<BigInt>& coeffs, double x);
std::vector<BigInt> poly_derivative(const std::vector<BigInt>& coeffs);
std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b);
/// p(lambda) -> p(lambda + s)
std::vector<BigInt> poly_compose_shift(const std::vector<BigInt>& coeffs, long long s);

/// Division-free exact characteristic polynomial of any square integer matrix.
CharPoly charpoly_of(const IntMatrix& a);

CharPoly charpoly_exact(const HelmholtzianMatrix& h);

/// Floating eigendecomposition followed by greedy clustering: descending
/// eigenvalues merge while consecutive gaps stay within
/// cluster_tol * max(1, lambda_1); each cluster reports the mean.
/// Residuals ||Hx - lambda x|| are validated against 1e-9 * ||H||_F.
Spectrum eigen_spectrum(const HelmholtzianMatrix& h, double cluster_tol = 1e-8);

/// Eigenvectors of (numerically) zero eigenvalues.
std::vector<std::vector<double>> null_vectors(const HelmholtzianMatrix& h, double tol = 1e-8);

/// Multiplicity of eigenvalue zero, computed exactly:
/// m minus the integer rank of B^T stacked over C.
std::size_t nullity_rank(const Graph& g, const Orientation& o);

struct FlaggedCount {
    long long value;
    bool valid;  // the triangle-edge incidence had rank equal to the triangle count
};

/// m - n - t + w; the flag records whether rank(C) = t actually held.
FlaggedCount nullity_formula(const Graph& g);

/// m - n - nullity + w; valid under the same rank(C) = t condition.
FlaggedCount triangles_from_nullity(const Graph& g);

struct LeastEigenvalueBounds {
    long long bound_i;               // min over edges of Delta(e) + 2
    bool bound_i_attained;           // iff the graph is complete
    std::optional<double> bound_ii;  // min over induced P3 pairs; absent for K_n
    double lambda_min;
};

/// Upper bounds for the least eigenvalue; throws on disconnected input and
/// if either bound is violated beyond floating tolerance.
LeastEigenvalueBounds least_eigenvalue_bounds(const Graph& g, const HelmholtzianMatrix& h);

/// Lagrange projectors P_i onto the eigenspace of each clustered eigenvalue.
/// Throws when two cluster values sit closer than 10 * cluster_tol (scaled).
std::vector<std::vector<double>> spectral_projectors(const HelmholtzianMatrix& h,
                                                     const Spectrum& sp,
                                                     double cluster_tol = 1e-8);

struct DistinctDiameterCheck {
    std::size_t distinct;  // s
    std::size_t diam;
    bool diameter_le_distinct;
    bool one_eigenvalue_iff_complete;
    bool two_eigenvalues_iff_complete_split;
};

/// Diameter <= number of distinct eigenvalues, plus the one- and two-eigenvalue
/// classifications checked as equivalences.
DistinctDiameterCheck distinct_count_and_diameter_check(const Graph& g, const Spectrum& sp);

/// True when the graph is K_t joined with s isolated vertices, s >= 2.
bool is_complete_split(const Graph& g);

struct HIntegralResult {
    bool is_integral;
    std::optional<Spectrum> spectrum;  // exact-integer spectrum when integral
};

/// Rounds the clustered spectrum to integers and confirms by expanding
/// prod (lambda - r_i)^{m_i} exactly against the characteristic polynomial,
/// so a near-integer float can never pass by accident.
HIntegralResult h_integral_test(const HelmholtzianMatrix& h, double cluster_tol = 1e-8);

/// The same round-and-confirm test for any symmetric integer matrix.
HIntegralResult integer_spectrum_confirm(const IntMatrix& sym, double cluster_tol = 1e-8);

/// Exact rank of the (s+1) x (s+1) Hankel matrix of power traces tr(H^{i+j}),
/// i.e. the Gram matrix of {I, H, ..., H^s} under the Frobenius inner product.
/// Equals s exactly when the clustering found the true distinct count.
std::size_t krylov_moment_rank(const HelmholtzianMatrix& h, std::size_t s);

/// Every clustered eigenvalue lies within 1e-8 * max(1, lambda_1) of a root of
/// the exact polynomial (sign change of the (mult-1)th derivative, with a
/// relative-residual fallback).
bool eigenvalues_match_charpoly_roots(const CharPoly& p, const Spectrum& sp);

}  // namespace hodge
