#pragma once

#include <cstddef>
#include <vector>

#include "hodge/bigint.hpp"

namespace hodge {

/// Dense matrix of exact integers. Sized for desk-scale graph work, where
/// density keeps the indexing trivial and BigInt entries keep everything exact.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    static IntMatrix identity(std::size_t n);

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;

    bool operator==(const IntMatrix& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_; }
    bool operator!=(const IntMatrix& rhs) const { return !(*this == rhs); }

    bool is_zero() const;
    bool is_symmetric() const;

    /// Stacks rhs below *this; column counts must match.
    IntMatrix vstack(const IntMatrix& rhs) const;

    BigInt trace() const;

    std::vector<double> to_double() const;  // row-major

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

/// Exact rank via fraction-free (Bareiss) elimination.
std::size_t exact_rank(const IntMatrix& m);

}  // namespace hodge
