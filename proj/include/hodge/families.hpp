#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hodge/graph.hpp"
#include "hodge/helmholtzian.hpp"
#include "hodge/spectral.hpp"

namespace hodge {

/// Named graph family, parseable from its canonical text form:
///   complete:4   multipartite:2,3   windmill:2;2,2   split:4,2
///   threshold:001101   join(complete:3,complete:3)   hseq(complete:2;1,1)
/// split:s,t is K_t joined with s isolated vertices.
struct FamilySpec {
    enum class Variant {
        complete,
        multipartite,
        windmill,
        complete_split,
        threshold,
        join,
        h_integral_seq,
    };
    Variant variant = Variant::complete;

    int order = 0;                  // complete
    std::vector<int> parts;         // multipartite / windmill parts
    int hub = 0;                    // windmill n0
    int split_s = 0, split_t = 0;   // split: K_t joined with s*K_1
    std::vector<int> bits;          // threshold code, first bit is the seed vertex
    std::shared_ptr<FamilySpec> left, right;  // join factors
    std::shared_ptr<FamilySpec> seed;         // hseq seed
    std::vector<std::pair<int, int>> steps;   // hseq (s, t) steps

    static FamilySpec parse(std::string_view text);
    std::string to_string() const;
};

/// Deterministic construction: vertices labelled part by part in declaration
/// order (threshold vertices in creation order), edges sorted lexicographically.
Graph gen_family(const FamilySpec& spec);

/// Exact spectrum for the families with a closed form: complete, split,
/// windmill, multipartite and threshold. Throws std::domain_error otherwise.
Spectrum closed_form_spectrum(const FamilySpec& spec);

/// Spectrum of the block matrix with (n_i+1)I diagonal blocks and all-ones
/// off-diagonal blocks: {n+1} u {n_i+1 each with multiplicity n_i-1} u {1: k-1}.
Spectrum n_matrix_spectrum(const std::vector<int>& parts);

Graph join_graphs(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph add_isolated_vertices(const Graph& g, int count);

/// D - A, assembled directly from degrees and adjacency.
IntMatrix laplacian_matrix(const Graph& g);

/// Helmholtzian of the join in block form: H(G1)+n2*I, H(G2)+n1*I and the
/// cross block I o A(comp G2) + A(comp G1) o I shifted by per-edge degrees.
/// Permutation-similar to the direct build of the joined graph.
HelmholtzianMatrix join_block_matrix(const Graph& g1, const Graph& g2);

/// Spectrum of the join of two regular graphs from the factor spectra.
/// Throws std::invalid_argument when a factor is not regular.
Spectrum join_regular_spectrum(const Graph& g1, const Graph& g2);

/// Exact spectrum of a threshold graph by the 0/1 recursion, carrying the
/// (integer) Laplacian spectrum alongside. Throws when the code is all zeros.
Spectrum threshold_spectrum_iterative(const std::vector<int>& bits);

/// Laplacian analogue of the integral-spectrum confirmation.
HIntegralResult laplacian_integral_test(const Graph& g, double cluster_tol = 1e-8);

/// Iterates G_{i+1} = K_s v (G_i u t*K_1) from a seed that must be both
/// H-integral and Laplacian-integral; every graph along the way is verified
/// H-integral. Returns the seed followed by one graph per step.
std::vector<Graph> h_integral_sequence(const Graph& seed,
                                       const std::vector<std::pair<int, int>>& steps);
std::vector<Graph> h_integral_sequence(const FamilySpec& seed,
                                       const std::vector<std::pair<int, int>>& steps);

}  // namespace hodge
