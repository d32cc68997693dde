#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hodge/bigint.hpp"
#include "hodge/graph.hpp"
#include "hodge/helmholtzian.hpp"
#include "hodge/incidence.hpp"

namespace hodge {

/// First three characteristic-polynomial coefficients from graph statistics
/// alone, with the intermediate sums kept for inspection.
struct ClosedFormCoeffs {
    BigInt c1, c2, c3;
    BigInt pair_product_sum;    // sum over unordered pairs of (Delta+2)(Delta+2)
    BigInt degree_pair_sum;     // sum over vertices of C(d(v), 2)
    BigInt triangle_term;       // 3 * t(G)
    BigInt c31, c32, c33;
};

ClosedFormCoeffs coeffs_closed_form(const Graph& g);

/// A vertex-disjoint union of isolated vertices, isolated edges and cycles
/// inside the signed loop graph; the unit of the coefficient expansion.
struct BasicSubgraph {
    std::vector<std::size_t> isolated;
    std::vector<std::pair<std::size_t, std::size_t>> matching;
    std::vector<std::vector<std::size_t>> cycles;  // vertex cycles of the loop-free reduction
    int sign;                                      // (-1)^{m(B) + neg odd cycles + pos even cycles}
    unsigned long long vertex_weight;              // product of loop counts over isolated vertices

    std::size_t order() const;
    std::size_t nontrivial_components() const { return matching.size() + cycles.size(); }
};

struct OracleBudgetExceeded : std::runtime_error {
    OracleBudgetExceeded() : std::runtime_error("coefficient oracle exceeded its work budget") {}
};

/// Visits every basic subgraph on exactly k vertices once.
void enumerate_basic_subgraphs(const SignedLoopGraph& slg, std::size_t k,
                               std::uint64_t work_budget,
                               const std::function<void(const BasicSubgraph&)>& visit);

/// Coefficient c_k of det(lambda*I - H) by exhaustive basic-subgraph
/// enumeration over the signed loop graph:
///   c_k = (-1)^k * sum over B of sign(B) * 2^{#cycles(B)} * vertex_weight(B).
/// Exhaustive, so feasible only at small edge counts; throws
/// OracleBudgetExceeded past the work budget.
BigInt coeff_ck_oracle(const Graph& g, const Orientation& o, std::size_t k,
                       std::uint64_t work_budget = 10'000'000);

/// Removing two loops at every vertex shifts the whole spectrum by two:
/// checks p_H(lambda) = p_{H - 2I}(lambda - 2) as exact polynomials.
bool loop_shift_check(const Graph& g, const Orientation& o);

}  // namespace hodge
