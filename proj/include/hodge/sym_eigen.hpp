#pragma once

#include <cstddef>
#include <vector>

namespace hodge {

/// Full eigendecomposition of a dense symmetric matrix.
/// values are sorted descending; vectors[k] is the (normalised) eigenvector
/// for values[k]. Deterministic: fixed sweep order, index tie-break on sort.
struct SymEigen {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};

/// Cyclic Jacobi on a row-major n x n symmetric matrix.
/// Throws std::invalid_argument when the input is not symmetric.
SymEigen sym_eigen(const std::vector<double>& a, std::size_t n);

}  // namespace hodge
