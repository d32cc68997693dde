#include "hodge/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hodge {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = BigInt(1);
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix::operator*: shape mismatch");
    IntMatrix r(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                r.at(i, j).add_mul(aik, rhs.at(k, j));
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("IntMatrix::operator+: shape mismatch");
    IntMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += rhs.a_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("IntMatrix::operator-: shape mismatch");
    IntMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= rhs.a_[i];
    return r;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::vstack(const IntMatrix& rhs) const {
    if (cols_ != rhs.cols_) throw std::invalid_argument("IntMatrix::vstack: column mismatch");
    IntMatrix r(rows_ + rhs.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < rhs.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = rhs.at(i, j);
    return r;
}

BigInt IntMatrix::trace() const {
    BigInt t;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

std::vector<double> IntMatrix::to_double() const {
    std::vector<double> d(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) d[i] = a_[i].to_double();
    return d;
}

std::size_t exact_rank(const IntMatrix& m) {
    IntMatrix w = m;
    const std::size_t rows = w.rows(), cols = w.cols();
    std::size_t rank = 0;
    BigInt prev(1);
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && w.at(piv, col).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t j = col; j < cols; ++j) std::swap(w.at(rank, j), w.at(piv, j));
        const BigInt pivot = w.at(rank, col);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            // Bareiss update keeps every intermediate an exact minor.
            const BigInt lead = w.at(i, col);
            for (std::size_t j = col; j < cols; ++j) {
                BigInt t = pivot * w.at(i, j) - lead * w.at(rank, j);
                w.at(i, j) = t.div_exact(prev);
            }
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

}  // namespace hodge
