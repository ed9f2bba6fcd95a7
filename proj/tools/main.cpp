#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tsfill/config.hpp"
#include "tsfill/report.hpp"
#include "tsfill/rng.hpp"
#include "tsfill/version.hpp"

namespace {

using namespace tsfill;

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct RunFlags {
    ConfigOverrides overrides;
    std::optional<std::filesystem::path> config_path;
    std::string out_dir = "out";
    bool serial = false;
};

// Raw flag values; translated into ConfigOverrides after parsing so that
// enum and list errors surface as configuration errors.
struct RawOverrides {
    std::string preset;
    std::vector<double> phi;
    std::vector<double> rates;
    std::optional<std::uint64_t> replicates;
    std::optional<std::uint64_t> length;
    std::optional<std::uint64_t> seed;
    std::string baseline;
    std::string estimator;
    std::string normalization;
    std::vector<std::string> methods;
};

void add_shared_flags(CLI::App* cmd, RawOverrides& raw) {
    cmd->add_option("--length", raw.length, "Series length n (default 500)");
    cmd->add_option("--baseline", raw.baseline,
                    "Scoring reference: sample (lag-1 PACF of the uncorrupted series) or "
                    "theoretical (the coefficient phi)")
        ->check(CLI::IsMember({"sample", "theoretical"}));
    cmd->add_option("--estimator", raw.estimator, "PACF estimator: yw or ols")
        ->check(CLI::IsMember({"yw", "ols"}));
    cmd->add_option("--normalization", raw.normalization,
                    "ACF normalization: biased or unbiased")
        ->check(CLI::IsMember({"biased", "unbiased"}));
}

ConfigOverrides to_overrides(const RawOverrides& raw) {
    ConfigOverrides o;
    if (!raw.preset.empty()) o.preset = raw.preset;
    if (!raw.phi.empty()) o.phi_grid = raw.phi;
    if (!raw.rates.empty()) o.dropout_grid = raw.rates;
    if (raw.replicates) o.replicates = static_cast<std::size_t>(*raw.replicates);
    if (raw.length) o.series_length = static_cast<std::size_t>(*raw.length);
    if (raw.seed) o.master_seed = *raw.seed;
    try {
        if (!raw.baseline.empty()) o.baseline = parse_baseline(raw.baseline);
        if (!raw.estimator.empty()) o.estimator = parse_estimator(raw.estimator);
        if (!raw.normalization.empty()) o.normalization = parse_normalization(raw.normalization);
        if (!raw.methods.empty()) {
            std::vector<FillMethod> methods;
            for (const std::string& name : raw.methods) methods.push_back(parse_fill_method(name));
            o.methods = methods;
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return o;
}

int cmd_run(const RunFlags& flags) {
    const ExperimentConfig config = resolve_config(flags.overrides, flags.config_path);
    RunManifest manifest;
    manifest.config = config;
    manifest.tool_version = std::string(kToolVersion);
    manifest.started = utc_timestamp();
    const GridResult result = flags.serial ? run_grid_serial(config) : run_grid(config);
    manifest.finished = utc_timestamp();
    manifest.failure_counts = result.failures;
    write_results(result, manifest, flags.out_dir);
    std::cout << "wrote " << result.aggregates.size() << " aggregate rows ("
              << result.replicates.size() << " replicate scores) to " << flags.out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Imputation benchmark for AR(1) series with missing values"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    RunFlags run_flags;
    RawOverrides run_raw;
    std::string config_file;
    CLI::App* run = app.add_subcommand(
        "run", "Run the full (phi, dropout, method) experiment grid and write CSV results");
    run->add_option("--preset", run_raw.preset, "Base preset: figures or methodology")
        ->check(CLI::IsMember({"figures", "methodology"}));
    run->add_option("--config", config_file, "JSON config file layered over the preset");
    run->add_option("--phi", run_raw.phi, "AR(1) coefficients, comma separated")
        ->delimiter(',');
    run->add_option("--rates", run_raw.rates, "Dropout rates, comma separated")->delimiter(',');
    run->add_option("--replicates", run_raw.replicates, "Replicates per cell (default 100)");
    run->add_option("--seed", run_raw.seed, "Master seed (default 42)");
    add_shared_flags(run, run_raw);
    run->add_option("--out", run_flags.out_dir, "Output directory (default ./out)");
    run->add_flag("--serial", run_flags.serial, "Force the single-threaded grid runner");

    RawOverrides demo_raw;
    double demo_phi = 0.4;
    double demo_rate = 0.2;
    std::uint64_t demo_seed = 1;
    CLI::App* demo = app.add_subcommand(
        "demo", "Walk one series through corruption, restoration, and scoring; print JSON");
    demo->add_option("--phi", demo_phi, "AR(1) coefficient");
    demo->add_option("--rate", demo_rate, "Dropout rate");
    demo->add_option("--seed", demo_seed, "Seed for this series");
    add_shared_flags(demo, demo_raw);

    std::string pacf_input;
    std::uint64_t pacf_max_lag = 10;
    bool pacf_header = false;
    RawOverrides pacf_raw;
    CLI::App* pacf = app.add_subcommand("pacf", "Estimate the PACF of a single-column CSV series");
    pacf->add_option("--input", pacf_input, "Input CSV (one value per line)")->required();
    pacf->add_option("--max-lag", pacf_max_lag, "Highest lag to report (default 10)");
    pacf->add_flag("--header", pacf_header, "Skip the first input line");
    pacf->add_option("--estimator", pacf_raw.estimator, "PACF estimator: yw or ols")
        ->check(CLI::IsMember({"yw", "ols"}));
    pacf->add_option("--normalization", pacf_raw.normalization,
                     "ACF normalization: biased or unbiased")
        ->check(CLI::IsMember({"biased", "unbiased"}));

    std::string impute_input;
    std::string impute_output;
    std::string impute_method = "mean_fill";
    bool impute_header = false;
    CLI::App* imp = app.add_subcommand("impute", "Fill the gaps of a single-column CSV series");
    imp->add_option("--input", impute_input, "Input CSV (empty line = missing value)")->required();
    imp->add_option("--output", impute_output, "Output CSV path (default: stdout)");
    imp->add_option("--method", impute_method, "forward_fill, backward_fill, or mean_fill")
        ->check(CLI::IsMember({"forward_fill", "backward_fill", "mean_fill"}));
    imp->add_flag("--header", impute_header, "Skip the first input line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(run)) {
            run_flags.overrides = to_overrides(run_raw);
            if (!config_file.empty()) run_flags.config_path = config_file;
            return cmd_run(run_flags);
        }
        if (app.got_subcommand(demo)) {
            ExperimentConfig settings = figures_preset();
            const ConfigOverrides o = to_overrides(demo_raw);
            if (o.series_length) settings.series_length = *o.series_length;
            if (o.baseline) settings.baseline = *o.baseline;
            if (o.estimator) settings.estimator = *o.estimator;
            if (o.normalization) settings.normalization = *o.normalization;
            if (!(demo_phi > -1.0 && demo_phi < 1.0))
                throw ConfigError("phi: value must lie in (-1, 1)");
            if (settings.series_length < 4) throw ConfigError("length: must be >= 4");
            try {
                (void)missing_count(demo_rate, settings.series_length);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(std::string("rate: ") + e.what());
            }
            std::cout << demo_single(demo_phi, demo_rate, demo_seed, settings).dump(2) << "\n";
            return 0;
        }
        if (app.got_subcommand(pacf)) {
            const auto column = read_series_column(pacf_input, pacf_header);
            Series series;
            for (const auto& v : column) {
                if (!v)
                    throw ConfigError(
                        "pacf: input has missing values; restore it first (see impute)");
                series.push_back(*v);
            }
            if (series.size() < 2 || pacf_max_lag < 1 || pacf_max_lag >= series.size())
                throw ConfigError("max-lag: need 1 <= max-lag < series length");
            const PacfEstimator estimator =
                pacf_raw.estimator.empty() ? PacfEstimator::YuleWalker
                                           : parse_estimator(pacf_raw.estimator);
            const Normalization normalization =
                pacf_raw.normalization.empty() ? Normalization::Unbiased
                                               : parse_normalization(pacf_raw.normalization);
            const std::size_t max_lag = static_cast<std::size_t>(pacf_max_lag);
            const PacfEstimate estimate =
                (estimator == PacfEstimator::YuleWalker)
                    ? sample_pacf_yw(series, max_lag, normalization)
                    : sample_pacf_ols(series, max_lag);
            std::cout << "lag,pacf\n";
            for (std::size_t h = 1; h <= estimate.lags; ++h)
                std::cout << h << "," << format_real(estimate.values[h - 1]) << "\n";
            return 0;
        }
        if (app.got_subcommand(imp)) {
            const auto column = read_series_column(impute_input, impute_header);
            Series values;
            std::vector<std::size_t> missing;
            for (std::size_t i = 0; i < column.size(); ++i) {
                if (column[i]) {
                    values.push_back(*column[i]);
                } else {
                    values.push_back(0.0);
                    missing.push_back(i);
                }
            }
            const MaskedSeries masked =
                MaskedSeries::from_missing_indices(std::move(values), std::move(missing));
            const Series restored = impute(masked, parse_fill_method(impute_method));
            if (impute_output.empty()) {
                for (double v : restored) std::cout << format_real(v) << "\n";
            } else {
                write_series_column(impute_output, restored);
            }
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const GridError& e) {
        std::cerr << "grid error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
