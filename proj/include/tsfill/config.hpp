#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tsfill/experiment.hpp"

namespace tsfill {

[[nodiscard]] nlohmann::json config_to_json(const ExperimentConfig& config);

/// Strict parse: every key must be known and well-typed; absent keys keep the
/// defaults of ExperimentConfig. Throws ConfigError naming the offending key.
[[nodiscard]] ExperimentConfig config_from_json(const nlohmann::json& j);

/// Per-field overrides collected from command-line flags.
struct ConfigOverrides {
    std::optional<std::string> preset;
    std::optional<std::vector<double>> phi_grid;
    std::optional<std::vector<double>> dropout_grid;
    std::optional<std::size_t> replicates;
    std::optional<std::size_t> series_length;
    std::optional<std::uint64_t> master_seed;
    std::optional<std::vector<FillMethod>> methods;
    std::optional<BaselineMode> baseline;
    std::optional<PacfEstimator> estimator;
    std::optional<Normalization> normalization;
};

/** Layered configuration resolution.
 *
 * Base is the preset named in overrides (default "figures"); fields present in
 * the config file override the preset; explicit flag overrides win over both.
 * The resolved config is validated before being returned.
 */
[[nodiscard]] ExperimentConfig resolve_config(
    const ConfigOverrides& overrides, const std::optional<std::filesystem::path>& config_path);

}  // namespace tsfill
