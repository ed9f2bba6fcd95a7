#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tsfill/series.hpp"

namespace tsfill {

/// Autoregressive model x_t = phi_1 x_{t-1} + ... + phi_p x_{t-p} + w_t with
/// w_t i.i.d. Gaussian of standard deviation noise_std.
struct ArModel {
    std::vector<double> coefficients;  // phi_1 .. phi_p
    double noise_std = 1.0;

    [[nodiscard]] std::size_t order() const noexcept { return coefficients.size(); }
};

/// True iff all roots of 1 - phi_1 z - ... - phi_p z^p lie outside the unit
/// circle, checked through step-down reflection coefficients.
[[nodiscard]] bool is_stationary(const ArModel& model);

/// Theoretical autocorrelations rho(0)..rho(max_lag); rho(1)..rho(p) solve the
/// Yule-Walker system, later lags follow rho(h) = sum_j phi_j rho(h-j).
[[nodiscard]] std::vector<double> theoretical_acf(const ArModel& model, std::size_t max_lag);

/// Theoretical partial autocorrelations alpha(1)..alpha(max_lag) via the
/// Durbin-Levinson recursion on theoretical_acf.
[[nodiscard]] std::vector<double> theoretical_pacf(const ArModel& model, std::size_t max_lag);

/// Process variance gamma(0) = sigma^2 / (1 - sum_j phi_j rho(j)).
[[nodiscard]] double stationary_variance(const ArModel& model);

struct SimulationSpec {
    std::size_t length = 500;
    std::uint64_t seed = 0;
    ArModel model;
};

/** Simulate a complete sample path of exactly spec.length values.
 *
 * The first p values are drawn from the stationary distribution (Cholesky
 * factor of the Toeplitz autocovariance block), so no burn-in is discarded.
 * Identical specs yield identical output. Requires length >= 4.
 */
[[nodiscard]] Series simulate(const SimulationSpec& spec);

}  // namespace tsfill
