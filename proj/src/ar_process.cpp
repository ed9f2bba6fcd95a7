#include "tsfill/ar_process.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dense_solve.hpp"
#include "tsfill/pacf.hpp"
#include "tsfill/rng.hpp"

namespace tsfill {

namespace {

void require_valid(const ArModel& model) {
    if (model.order() == 0) throw std::invalid_argument("ArModel: order must be >= 1");
    if (!(model.noise_std > 0.0)) throw std::invalid_argument("ArModel: noise_std must be > 0");
}

void require_stationary(const ArModel& model) {
    require_valid(model);
    if (!is_stationary(model))
        throw std::domain_error("ArModel: characteristic roots must lie outside the unit circle");
}

}  // namespace

bool is_stationary(const ArModel& model) {
    if (model.order() == 0) throw std::invalid_argument("is_stationary: order must be >= 1");
    // Step-down recursion: the model is stationary iff every reflection
    // coefficient k_m = a_m[m] satisfies |k_m| < 1.
    std::vector<double> a = model.coefficients;
    for (std::size_t m = a.size(); m >= 1; --m) {
        const double k = a[m - 1];
        if (!(std::abs(k) < 1.0)) return false;
        if (m == 1) break;
        std::vector<double> next(m - 1, 0.0);
        const double denom = 1.0 - k * k;
        for (std::size_t j = 1; j < m; ++j) next[j - 1] = (a[j - 1] + k * a[m - j - 1]) / denom;
        a = std::move(next);
    }
    return true;
}

std::vector<double> theoretical_acf(const ArModel& model, std::size_t max_lag) {
    require_stationary(model);
    const std::size_t p = model.order();
    const auto& phi = model.coefficients;

    std::vector<double> rho(std::max(max_lag, p) + 1, 0.0);
    rho[0] = 1.0;
    // Yule-Walker system for rho(1)..rho(p): for each h,
    // rho(h) - sum_{k>=1} (sum_{j : |h-j| = k} phi_j) rho(k) = phi_h.
    std::vector<std::vector<double>> a(p, std::vector<double>(p, 0.0));
    std::vector<double> b(p, 0.0);
    for (std::size_t h = 1; h <= p; ++h) {
        b[h - 1] = phi[h - 1];
        a[h - 1][h - 1] += 1.0;
        for (std::size_t j = 1; j <= p; ++j) {
            const std::size_t k = (h > j) ? h - j : j - h;
            if (k >= 1) a[h - 1][k - 1] -= phi[j - 1];
        }
    }
    const auto head = detail::solve_dense(std::move(a), std::move(b), 1e-12);
    if (!head)
        throw NumericalDegeneracyError("theoretical_acf: Yule-Walker system is singular");
    for (std::size_t h = 1; h <= p; ++h) rho[h] = (*head)[h - 1];
    for (std::size_t h = p + 1; h <= max_lag; ++h) {
        double s = 0.0;
        for (std::size_t j = 1; j <= p; ++j) s += phi[j - 1] * rho[h - j];
        rho[h] = s;
    }
    rho.resize(max_lag + 1);
    return rho;
}

std::vector<double> theoretical_pacf(const ArModel& model, std::size_t max_lag) {
    if (max_lag < 1) throw std::invalid_argument("theoretical_pacf: max_lag must be >= 1");
    return pacf_from_acf(theoretical_acf(model, max_lag), max_lag);
}

double stationary_variance(const ArModel& model) {
    require_stationary(model);
    const std::size_t p = model.order();
    const std::vector<double> rho = theoretical_acf(model, p);
    double s = 0.0;
    for (std::size_t j = 1; j <= p; ++j) s += model.coefficients[j - 1] * rho[j];
    return model.noise_std * model.noise_std / (1.0 - s);
}

Series simulate(const SimulationSpec& spec) {
    require_stationary(spec.model);
    if (spec.length < 4) throw std::invalid_argument("SimulationSpec: length must be >= 4");

    const std::size_t p = spec.model.order();
    const std::size_t n = spec.length;
    const auto& phi = spec.model.coefficients;
    const double sigma = spec.model.noise_std;

    const double gamma0 = stationary_variance(spec.model);
    const std::vector<double> rho = theoretical_acf(spec.model, p > 0 ? p - 1 : 0);

    // Cholesky factor of the p x p Toeplitz block gamma0 * rho(|i-j|).
    std::vector<std::vector<double>> chol(p, std::vector<double>(p, 0.0));
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = gamma0 * rho[i - j];
            for (std::size_t k = 0; k < j; ++k) s -= chol[i][k] * chol[j][k];
            if (i == j) {
                if (!(s > 0.0))
                    throw NumericalDegeneracyError(
                        "simulate: stationary covariance is not positive definite");
                chol[i][i] = std::sqrt(s);
            } else {
                chol[i][j] = s / chol[j][j];
            }
        }
    }

    GaussianStream noise(spec.seed);
    Series x(n, 0.0);
    std::vector<double> z(p, 0.0);
    for (std::size_t i = 0; i < p; ++i) z[i] = noise.next();
    for (std::size_t i = 0; i < std::min(p, n); ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k <= i; ++k) s += chol[i][k] * z[k];
        x[i] = s;
    }
    for (std::size_t t = p; t < n; ++t) {
        double s = sigma * noise.next();
        for (std::size_t j = 1; j <= p; ++j) s += phi[j - 1] * x[t - j];
        x[t] = s;
    }
    return x;
}

}  // namespace tsfill
