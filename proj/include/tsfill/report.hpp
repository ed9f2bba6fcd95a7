#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "tsfill/experiment.hpp"

namespace tsfill {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunManifest {
    ExperimentConfig config;
    std::string tool_version;
    std::string started;   // ISO-8601 UTC
    std::string finished;  // ISO-8601 UTC
    std::vector<CellFailureCount> failure_counts;
};

/// Locale-free serialization with 17 significant digits; round-trips exactly.
[[nodiscard]] std::string format_real(double value);

/// Shortest round-trip form, used for file names and messages.
[[nodiscard]] std::string format_real_short(double value);

/// Header `phi,dropout,method,mean_score,std_score,replicates`, rows in the
/// order given (lexicographic for grid output).
[[nodiscard]] std::string aggregate_csv(const std::vector<AggregateResult>& aggregates);
[[nodiscard]] std::vector<AggregateResult> parse_aggregate_csv(const std::string& text);

/// Header `phi,dropout,method,replicate_index,score,replicate_seed`.
[[nodiscard]] std::string replicates_csv(const std::vector<ReplicateResult>& replicates);

/** One figure's data: mean scores of the three methods at one dropout rate.
 *
 * Header `phi,forward_mean,backward_mean,mean_fill_mean`, sorted by phi.
 * Throws std::invalid_argument when the rate is absent (message lists the
 * available rates) or when any method's cells are missing.
 */
[[nodiscard]] std::string plot_table_csv(const std::vector<AggregateResult>& aggregates,
                                         double dropout);

[[nodiscard]] nlohmann::json manifest_json(const RunManifest& manifest);
[[nodiscard]] RunManifest manifest_from_json(const nlohmann::json& j);

/// Writes aggregate.csv, replicates.csv, manifest.json, and (when all three
/// methods are present) one plot_dropout_<rate>.csv per rate into out_dir.
void write_results(const GridResult& result, const RunManifest& manifest,
                   const std::filesystem::path& out_dir);

/** Single-series walk-through: simulate, corrupt, restore with all three
 * methods, and score. Returns one machine-readable record holding the original
 * series, missing indices, restored series, lag-1 PACF values, and scores.
 * The grids of `settings` are ignored; its length, baseline, estimator, and
 * normalization apply.
 */
[[nodiscard]] nlohmann::json demo_single(double phi, double dropout, std::uint64_t seed,
                                         const ExperimentConfig& settings);

/// Single-column CSV; an empty line (or a NaN token) is a missing value.
[[nodiscard]] std::vector<std::optional<double>> read_series_column(
    const std::filesystem::path& path, bool header);

void write_series_column(const std::filesystem::path& path, std::span<const double> series);

}  // namespace tsfill
