#include "tsfill/pacf.hpp"

#include <algorithm>
#include <cmath>

#include "dense_solve.hpp"

namespace tsfill {

namespace {

constexpr double kDenominatorTol = 1e-12;
constexpr double kSingularTol = 1e-10;

double mean_of(std::span<const double> series) {
    double s = 0.0;
    for (double x : series) s += x;
    return s / static_cast<double>(series.size());
}

}  // namespace

AcfEstimate sample_acf(std::span<const double> series, std::size_t max_lag,
                       Normalization normalization) {
    const std::size_t n = series.size();
    if (n == 0 || max_lag >= n)
        throw std::invalid_argument("sample_acf: series length must exceed max_lag");
    if (std::all_of(series.begin(), series.end(), [&](double x) { return x == series[0]; }))
        throw DegenerateSeriesError("sample_acf: constant series has zero sample variance");
    const double mean = mean_of(series);
    double c0 = 0.0;
    for (double x : series) c0 += (x - mean) * (x - mean);
    c0 /= static_cast<double>(n);
    if (c0 <= 0.0) throw DegenerateSeriesError("sample_acf: zero sample variance");

    AcfEstimate out;
    out.lags = max_lag;
    out.normalization = normalization;
    out.values.resize(max_lag + 1);
    out.values[0] = 1.0;
    for (std::size_t h = 1; h <= max_lag; ++h) {
        double s = 0.0;
        for (std::size_t t = 0; t + h < n; ++t) s += (series[t] - mean) * (series[t + h] - mean);
        const double d = (normalization == Normalization::Biased) ? static_cast<double>(n)
                                                                  : static_cast<double>(n - h);
        out.values[h] = (s / d) / c0;
    }
    return out;
}

std::vector<double> pacf_from_acf(std::span<const double> acf, std::size_t max_lag) {
    if (max_lag < 1) throw std::invalid_argument("pacf_from_acf: max_lag must be >= 1");
    if (acf.size() < max_lag + 1)
        throw std::invalid_argument("pacf_from_acf: need acf values up to max_lag");

    std::vector<double> alpha(max_lag, 0.0);
    std::vector<double> phi(max_lag + 1, 0.0);   // phi[j] = phi_{h,j}
    std::vector<double> prev(max_lag + 1, 0.0);
    alpha[0] = acf[1];
    phi[1] = alpha[0];
    for (std::size_t h = 2; h <= max_lag; ++h) {
        double num = acf[h];
        double den = 1.0;
        for (std::size_t j = 1; j < h; ++j) {
            num -= phi[j] * acf[h - j];
            den -= phi[j] * acf[j];
        }
        if (std::abs(den) < kDenominatorTol)
            throw NumericalDegeneracyError("pacf_from_acf: recursion denominator vanished at lag " +
                                           std::to_string(h));
        const double a = num / den;
        prev = phi;
        for (std::size_t j = 1; j < h; ++j) phi[j] = prev[j] - a * prev[h - j];
        phi[h] = a;
        alpha[h - 1] = a;
    }
    return alpha;
}

PacfEstimate sample_pacf_yw(std::span<const double> series, std::size_t max_lag,
                            Normalization normalization) {
    if (max_lag < 1) throw std::invalid_argument("sample_pacf_yw: max_lag must be >= 1");
    const AcfEstimate acf = sample_acf(series, max_lag, normalization);
    PacfEstimate out;
    out.lags = max_lag;
    out.estimator = PacfEstimator::YuleWalker;
    out.values = pacf_from_acf(acf.values, max_lag);
    return out;
}

PacfEstimate sample_pacf_ols(std::span<const double> series, std::size_t max_lag) {
    const std::size_t n = series.size();
    if (max_lag < 1) throw std::invalid_argument("sample_pacf_ols: max_lag must be >= 1");
    if (n <= max_lag + 1)
        throw std::invalid_argument("sample_pacf_ols: series length must exceed max_lag + 1");

    PacfEstimate out;
    out.lags = max_lag;
    out.estimator = PacfEstimator::Ols;
    out.values.resize(max_lag, 0.0);
    for (std::size_t h = 1; h <= max_lag; ++h) {
        // Normal equations for regressing x_t on (1, x_{t-1}, ..., x_{t-h}).
        const std::size_t dim = h + 1;
        std::vector<std::vector<double>> g(dim, std::vector<double>(dim, 0.0));
        std::vector<double> rhs(dim, 0.0);
        for (std::size_t t = h; t < n; ++t) {
            std::vector<double> row(dim, 1.0);
            for (std::size_t j = 1; j <= h; ++j) row[j] = series[t - j];
            for (std::size_t a = 0; a < dim; ++a) {
                rhs[a] += row[a] * series[t];
                for (std::size_t b = 0; b < dim; ++b) g[a][b] += row[a] * row[b];
            }
        }
        const auto beta = detail::solve_dense(std::move(g), std::move(rhs), kSingularTol);
        if (!beta)
            throw NumericalDegeneracyError("sample_pacf_ols: rank-deficient design at lag " +
                                           std::to_string(h));
        out.values[h - 1] = (*beta)[h];
    }
    return out;
}

double sample_pacf1(std::span<const double> series, PacfEstimator estimator,
                    Normalization normalization) {
    if (estimator == PacfEstimator::YuleWalker)
        return sample_pacf_yw(series, 1, normalization).values[0];
    return sample_pacf_ols(series, 1).values[0];
}

double accuracy_score(double pacf1, double reference_pacf1) {
    if (!(reference_pacf1 > -1.0 && reference_pacf1 < 1.0))
        throw std::invalid_argument("accuracy_score: reference PACF must lie in (-1, 1)");
    return std::abs(pacf1 - reference_pacf1);
}

double accuracy_score(std::span<const double> restored, double reference_pacf1,
                      PacfEstimator estimator, Normalization normalization) {
    return accuracy_score(sample_pacf1(restored, estimator, normalization), reference_pacf1);
}

std::string to_string(Normalization normalization) {
    return normalization == Normalization::Biased ? "biased" : "unbiased";
}

std::string to_string(PacfEstimator estimator) {
    return estimator == PacfEstimator::YuleWalker ? "yw" : "ols";
}

Normalization parse_normalization(std::string_view name) {
    if (name == "biased") return Normalization::Biased;
    if (name == "unbiased") return Normalization::Unbiased;
    throw std::invalid_argument("unknown normalization '" + std::string(name) +
                                "' (expected biased or unbiased)");
}

PacfEstimator parse_estimator(std::string_view name) {
    if (name == "yw") return PacfEstimator::YuleWalker;
    if (name == "ols") return PacfEstimator::Ols;
    throw std::invalid_argument("unknown estimator '" + std::string(name) +
                                "' (expected yw or ols)");
}

}  // namespace tsfill
