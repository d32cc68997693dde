#include "hodge/sym_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hodge {

SymEigen sym_eigen(const std::vector<double>& a, std::size_t n) {
    if (a.size() != n * n) throw std::invalid_argument("sym_eigen: size mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a[i * n + j] != a[j * n + i])
                throw std::invalid_argument("sym_eigen: matrix not symmetric");

    std::vector<double> w = a;
    std::vector<double> v(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += std::abs(w[i * n + j]);
        return s;
    };

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double sm = off_norm();
        if (sm == 0.0) break;
        double thresh = sweep < 3 ? 0.2 * sm / static_cast<double>(n * n) : 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = w[p * n + q];
                double g = 100.0 * std::abs(apq);
                if (sweep > 3 && std::abs(w[p * n + p]) + g == std::abs(w[p * n + p]) &&
                    std::abs(w[q * n + q]) + g == std::abs(w[q * n + q])) {
                    w[p * n + q] = w[q * n + p] = 0.0;
                    continue;
                }
                if (std::abs(apq) <= thresh) continue;
                double h = w[q * n + q] - w[p * n + p];
                double t;
                if (std::abs(h) + g == std::abs(h)) {
                    t = apq / h;
                } else {
                    double theta = 0.5 * h / apq;
                    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                double tau = s / (1.0 + c);
                double hpq = t * apq;
                w[p * n + p] -= hpq;
                w[q * n + q] += hpq;
                w[p * n + q] = w[q * n + p] = 0.0;
                auto rotate = [&](std::vector<double>& mtx, std::size_t i1, std::size_t j1,
                                  std::size_t i2, std::size_t j2) {
                    double g1 = mtx[i1 * n + j1];
                    double h1 = mtx[i2 * n + j2];
                    mtx[i1 * n + j1] = g1 - s * (h1 + g1 * tau);
                    mtx[i2 * n + j2] = h1 + s * (g1 - h1 * tau);
                };
                for (std::size_t j = 0; j < p; ++j) {
                    rotate(w, j, p, j, q);
                    w[p * n + j] = w[j * n + p];
                    w[q * n + j] = w[j * n + q];
                }
                for (std::size_t j = p + 1; j < q; ++j) {
                    rotate(w, p, j, j, q);
                    w[j * n + p] = w[p * n + j];
                    w[q * n + j] = w[j * n + q];
                }
                for (std::size_t j = q + 1; j < n; ++j) {
                    rotate(w, p, j, q, j);
                    w[j * n + p] = w[p * n + j];
                    w[j * n + q] = w[q * n + j];
                }
                for (std::size_t j = 0; j < n; ++j) rotate(v, j, p, j, q);
            }
        if (sweep == max_sweeps - 1)
            throw std::runtime_error("sym_eigen: no convergence");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return w[i * n + i] > w[j * n + j];
    });

    SymEigen out;
    out.values.resize(n);
    out.vectors.assign(n, std::vector<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = w[order[k] * n + order[k]];
        for (std::size_t i = 0; i < n; ++i) out.vectors[k][i] = v[i * n + order[k]];
    }
    return out;
}

}  // namespace hodge
