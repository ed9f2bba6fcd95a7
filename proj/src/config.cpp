#include "tsfill/config.hpp"

#include <fstream>

namespace tsfill {

namespace {

using nlohmann::json;

std::vector<double> double_list(const json& value, const std::string& key) {
    if (!value.is_array()) throw ConfigError("config: key '" + key + "' must be an array");
    std::vector<double> out;
    for (const auto& item : value) {
        if (!item.is_number())
            throw ConfigError("config: key '" + key + "' must contain only numbers");
        out.push_back(item.get<double>());
    }
    return out;
}

std::uint64_t unsigned_value(const json& value, const std::string& key) {
    if (!value.is_number_unsigned())
        throw ConfigError("config: key '" + key + "' must be a non-negative integer");
    return value.get<std::uint64_t>();
}

std::string string_value(const json& value, const std::string& key) {
    if (!value.is_string()) throw ConfigError("config: key '" + key + "' must be a string");
    return value.get<std::string>();
}

void apply_overlay(ExperimentConfig& config, const json& j) {
    if (!j.is_object()) throw ConfigError("config: top level must be an object");
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "phi_grid") {
                config.phi_grid = double_list(value, key);
            } else if (key == "dropout_grid") {
                config.dropout_grid = double_list(value, key);
            } else if (key == "replicates") {
                config.replicates = static_cast<std::size_t>(unsigned_value(value, key));
            } else if (key == "series_length") {
                config.series_length = static_cast<std::size_t>(unsigned_value(value, key));
            } else if (key == "master_seed") {
                config.master_seed = unsigned_value(value, key);
            } else if (key == "methods") {
                if (!value.is_array())
                    throw ConfigError("config: key 'methods' must be an array of strings");
                std::vector<FillMethod> methods;
                for (const auto& item : value)
                    methods.push_back(parse_fill_method(string_value(item, key)));
                config.methods = std::move(methods);
            } else if (key == "baseline") {
                config.baseline = parse_baseline(string_value(value, key));
            } else if (key == "estimator") {
                config.estimator = parse_estimator(string_value(value, key));
            } else if (key == "normalization") {
                config.normalization = parse_normalization(string_value(value, key));
            } else {
                throw ConfigError("config: unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw ConfigError("config: key '" + key + "': " + e.what());
        }
    }
}

}  // namespace

nlohmann::json config_to_json(const ExperimentConfig& config) {
    json methods = json::array();
    for (FillMethod m : config.methods) methods.push_back(to_string(m));
    return json{{"phi_grid", config.phi_grid},
                {"dropout_grid", config.dropout_grid},
                {"replicates", config.replicates},
                {"series_length", config.series_length},
                {"master_seed", config.master_seed},
                {"methods", methods},
                {"baseline", to_string(config.baseline)},
                {"estimator", to_string(config.estimator)},
                {"normalization", to_string(config.normalization)}};
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig config;
    config.phi_grid.clear();
    config.dropout_grid.clear();
    apply_overlay(config, j);
    return config;
}

ExperimentConfig resolve_config(const ConfigOverrides& overrides,
                                const std::optional<std::filesystem::path>& config_path) {
    ExperimentConfig config = preset_by_name(overrides.preset.value_or("figures"));

    if (config_path) {
        std::ifstream in(*config_path);
        if (!in)
            throw ConfigError("config: cannot open file '" + config_path->string() + "'");
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw ConfigError("config: file '" + config_path->string() + "' is not valid JSON: " +
                              e.what());
        }
        apply_overlay(config, j);
    }

    if (overrides.phi_grid) config.phi_grid = *overrides.phi_grid;
    if (overrides.dropout_grid) config.dropout_grid = *overrides.dropout_grid;
    if (overrides.replicates) config.replicates = *overrides.replicates;
    if (overrides.series_length) config.series_length = *overrides.series_length;
    if (overrides.master_seed) config.master_seed = *overrides.master_seed;
    if (overrides.methods) config.methods = *overrides.methods;
    if (overrides.baseline) config.baseline = *overrides.baseline;
    if (overrides.estimator) config.estimator = *overrides.estimator;
    if (overrides.normalization) config.normalization = *overrides.normalization;

    validate(config);
    return config;
}

}  // namespace tsfill
