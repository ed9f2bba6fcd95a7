#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tsfill/ar_process.hpp"
#include "tsfill/corruption.hpp"
#include "tsfill/imputation.hpp"
#include "tsfill/pacf.hpp"

namespace tsfill {

/// Reference the restored series is scored against: the model coefficient phi
/// itself, or the lag-1 sample PACF of the uncorrupted series.
enum class BaselineMode { TheoreticalPhi, UncorruptedSamplePacf };

[[nodiscard]] std::string to_string(BaselineMode baseline);
[[nodiscard]] BaselineMode parse_baseline(std::string_view name);

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a grid cell exceeds the failed-replicate budget.
class GridError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    std::vector<double> phi_grid;
    std::vector<double> dropout_grid;
    std::size_t replicates = 100;
    std::size_t series_length = 500;
    std::uint64_t master_seed = 42;
    std::vector<FillMethod> methods{kAllFillMethods.begin(), kAllFillMethods.end()};
    BaselineMode baseline = BaselineMode::UncorruptedSamplePacf;
    PacfEstimator estimator = PacfEstimator::YuleWalker;
    Normalization normalization = Normalization::Unbiased;

    [[nodiscard]] bool operator==(const ExperimentConfig&) const = default;
};

/// Throws ConfigError naming the offending field when any invariant fails.
void validate(const ExperimentConfig& config);

/// 18 phi values -0.9..-0.1, 0.1..0.9; rates {0.10, 0.15, 0.20, 0.25}; R=100.
[[nodiscard]] ExperimentConfig figures_preset();

/// 9 phi values 0.1..0.9; rates {0.05, 0.10, 0.20, 0.30}; R=100.
[[nodiscard]] ExperimentConfig methodology_preset();

/// Named preset lookup ("figures" or "methodology"); throws ConfigError otherwise.
[[nodiscard]] ExperimentConfig preset_by_name(std::string_view name);

struct ReplicateResult {
    double phi = 0.0;
    double dropout = 0.0;
    FillMethod method = FillMethod::ForwardFill;
    std::size_t replicate_index = 0;
    double score = 0.0;
    std::uint64_t replicate_seed = 0;
};

struct AggregateResult {
    double phi = 0.0;
    double dropout = 0.0;
    FillMethod method = FillMethod::ForwardFill;
    double mean_score = 0.0;
    double std_score = 0.0;
    std::size_t replicates = 0;  // replicates included (excludes failures)
    bool std_defined = true;     // false when only one replicate contributed

    [[nodiscard]] bool operator==(const AggregateResult&) const = default;
};

struct CellFailureCount {
    double phi = 0.0;
    double dropout = 0.0;
    FillMethod method = FillMethod::ForwardFill;
    std::size_t failed = 0;

    [[nodiscard]] bool operator==(const CellFailureCount&) const = default;
};

struct GridResult {
    std::vector<AggregateResult> aggregates;   // lexicographic (phi, dropout, method)
    std::vector<ReplicateResult> replicates;   // same cell order, then replicate index
    std::vector<CellFailureCount> failures;    // cells with at least one failure
};

/// Seed of replicate i in cell (phi_index, rate_index), derived from the
/// master seed. Stable under reordering of the work schedule.
[[nodiscard]] std::uint64_t replicate_seed(std::uint64_t master_seed, std::size_t phi_index,
                                           std::size_t rate_index, std::size_t replicate_index);

/** Score one method on one simulated-then-corrupted series.
 *
 * Pipeline: simulate -> record baseline reference -> drop_values -> impute ->
 * lag-1 sample PACF -> absolute difference. Degeneracy errors propagate.
 * The model argument is authoritative; sim.model is ignored.
 */
[[nodiscard]] ReplicateResult run_replicate(const ArModel& model, const DropoutSpec& dropout,
                                            FillMethod method, const SimulationSpec& sim,
                                            BaselineMode baseline, PacfEstimator estimator,
                                            Normalization normalization);

/// Mean and sample standard deviation (divisor R-1) of one cell's scores.
/// All results must share (phi, dropout, method).
[[nodiscard]] AggregateResult aggregate(const std::vector<ReplicateResult>& results);

/** Run the full (phi, dropout, method) grid.
 *
 * Replicates run in parallel when OpenMP is enabled; results are identical to
 * run_grid_serial. Grids are processed in ascending order. A cell whose failed
 * replicates exceed 10% of R raises GridError.
 */
[[nodiscard]] GridResult run_grid(const ExperimentConfig& config);

/// Single-threaded reference implementation of run_grid.
[[nodiscard]] GridResult run_grid_serial(const ExperimentConfig& config);

}  // namespace tsfill
