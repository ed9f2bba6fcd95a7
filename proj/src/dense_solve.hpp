#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace tsfill::detail {

/// Gaussian elimination with partial pivoting on a dense system A x = b.
/// Returns nullopt when a pivot falls below rel_tol times the largest initial |A| entry.
inline std::optional<std::vector<double>> solve_dense(std::vector<std::vector<double>> a,
                                                      std::vector<double> b, double rel_tol) {
    const std::size_t n = b.size();
    double max_abs = 0.0;
    for (const auto& row : a)
        for (double v : row) max_abs = std::max(max_abs, std::abs(v));
    if (max_abs == 0.0) return std::nullopt;
    const double tol = rel_tol * max_abs;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) <= tol) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
        x[i] = s / a[i][i];
    }
    return x;
}

}  // namespace tsfill::detail
