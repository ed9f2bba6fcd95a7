#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tsfill {

enum class Normalization { Biased, Unbiased };
enum class PacfEstimator { YuleWalker, Ols };

/// Thrown when a series has zero sample variance, leaving the ACF undefined.
class DegenerateSeriesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a recursion denominator or linear system is numerically singular.
class NumericalDegeneracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AcfEstimate {
    std::size_t lags = 0;        // max lag H
    std::vector<double> values;  // rho(0) .. rho(H), values[0] == 1
    Normalization normalization = Normalization::Unbiased;
};

struct PacfEstimate {
    std::size_t lags = 0;        // max lag H
    std::vector<double> values;  // alpha(1) .. alpha(H)
    PacfEstimator estimator = PacfEstimator::YuleWalker;
};

/** Sample autocorrelation of a complete series.
 *
 * rho(h) = c(h)/c(0) with c(h) = (1/d_h) * sum_{t} (x_t - mean)(x_{t+h} - mean);
 * d_h is n for Biased and n-h for Unbiased normalization.
 *
 * Requires series length > max_lag. Throws DegenerateSeriesError when the
 * series is constant (zero sample variance).
 */
[[nodiscard]] AcfEstimate sample_acf(std::span<const double> series, std::size_t max_lag,
                                     Normalization normalization);

/** Durbin-Levinson recursion on an autocorrelation sequence rho(0..H).
 *
 * Returns alpha(1)..alpha(max_lag). Throws NumericalDegeneracyError when a
 * recursion denominator falls within 1e-12 of zero.
 */
[[nodiscard]] std::vector<double> pacf_from_acf(std::span<const double> acf, std::size_t max_lag);

/// Sample PACF via Durbin-Levinson on the sample ACF.
[[nodiscard]] PacfEstimate sample_pacf_yw(std::span<const double> series, std::size_t max_lag,
                                          Normalization normalization);

/** Sample PACF via per-lag least squares.
 *
 * alpha(h) is the coefficient on x_{t-h} in the regression of x_t on
 * (1, x_{t-1}, ..., x_{t-h}). Requires series length > max_lag + 1. Throws
 * NumericalDegeneracyError on a rank-deficient design.
 */
[[nodiscard]] PacfEstimate sample_pacf_ols(std::span<const double> series, std::size_t max_lag);

/// Lag-1 sample PACF under the chosen estimator.
[[nodiscard]] double sample_pacf1(std::span<const double> series, PacfEstimator estimator,
                                  Normalization normalization);

/// |pacf1 - reference_pacf1|. Requires reference_pacf1 in (-1, 1).
[[nodiscard]] double accuracy_score(double pacf1, double reference_pacf1);

/// Score a restored series against a reference lag-1 PACF.
[[nodiscard]] double accuracy_score(std::span<const double> restored, double reference_pacf1,
                                    PacfEstimator estimator, Normalization normalization);

[[nodiscard]] std::string to_string(Normalization normalization);
[[nodiscard]] std::string to_string(PacfEstimator estimator);
[[nodiscard]] Normalization parse_normalization(std::string_view name);
[[nodiscard]] PacfEstimator parse_estimator(std::string_view name);

}  // namespace tsfill
