#include "tsfill/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <utility>

#include "tsfill/rng.hpp"

namespace tsfill {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

template <typename T>
bool has_duplicate(std::vector<T> values) {
    std::sort(values.begin(), values.end());
    return std::adjacent_find(values.begin(), values.end()) != values.end();
}

// Validated copy of a config with grids sorted ascending; cell and seed
// indices refer to these sorted grids.
struct Plan {
    std::vector<double> phi;
    std::vector<double> rates;
    std::vector<FillMethod> methods;
    std::size_t replicates;
    std::size_t length;
    std::uint64_t master_seed;
    BaselineMode baseline;
    PacfEstimator estimator;
    Normalization normalization;
};

Plan make_plan(const ExperimentConfig& config) {
    Plan plan{config.phi_grid,
              config.dropout_grid,
              config.methods,
              config.replicates,
              config.series_length,
              config.master_seed,
              config.baseline,
              config.estimator,
              config.normalization};
    std::sort(plan.phi.begin(), plan.phi.end());
    std::sort(plan.rates.begin(), plan.rates.end());
    std::sort(plan.methods.begin(), plan.methods.end());
    return plan;
}

// Scores every method of one (phi_index, rate_index, replicate_index) unit,
// writing into caller-provided slots. Degeneracy marks the slot failed; any
// other exception propagates.
void execute_unit(const Plan& plan, std::size_t unit, double* scores, unsigned char* failed) {
    const std::size_t per_phi = plan.rates.size() * plan.replicates;
    const std::size_t pi = unit / per_phi;
    const std::size_t ri = (unit % per_phi) / plan.replicates;
    const std::size_t i = unit % plan.replicates;
    const std::size_t m = plan.methods.size();

    const std::uint64_t rep_seed = replicate_seed(plan.master_seed, pi, ri, i);
    const ArModel model{{plan.phi[pi]}, 1.0};
    const Series original =
        simulate(SimulationSpec{plan.length, derive_seed(rep_seed, {0}), model});

    double reference = 0.0;
    bool reference_ok = true;
    try {
        reference = (plan.baseline == BaselineMode::TheoreticalPhi)
                        ? theoretical_pacf(model, 1)[0]
                        : sample_pacf1(original, plan.estimator, plan.normalization);
    } catch (const DegenerateSeriesError&) {
        reference_ok = false;
    } catch (const NumericalDegeneracyError&) {
        reference_ok = false;
    }
    if (reference_ok && !(reference > -1.0 && reference < 1.0)) reference_ok = false;
    if (!reference_ok) {
        for (std::size_t j = 0; j < m; ++j) failed[j] = 1;
        return;
    }

    const MaskedSeries masked =
        drop_values(original, DropoutSpec{plan.rates[ri], derive_seed(rep_seed, {1})});
    for (std::size_t j = 0; j < m; ++j) {
        try {
            const Series restored = impute(masked, plan.methods[j]);
            scores[j] = accuracy_score(restored, reference, plan.estimator, plan.normalization);
            failed[j] = 0;
        } catch (const DegenerateSeriesError&) {
            failed[j] = 1;
        } catch (const NumericalDegeneracyError&) {
            failed[j] = 1;
        }
    }
}

GridResult assemble(const Plan& plan, const std::vector<double>& scores,
                    const std::vector<unsigned char>& failed) {
    const std::size_t r = plan.replicates;
    const std::size_t m = plan.methods.size();
    GridResult out;
    std::vector<ReplicateResult> cell;
    for (std::size_t pi = 0; pi < plan.phi.size(); ++pi) {
        for (std::size_t ri = 0; ri < plan.rates.size(); ++ri) {
            for (std::size_t mi = 0; mi < m; ++mi) {
                cell.clear();
                std::size_t cell_failed = 0;
                for (std::size_t i = 0; i < r; ++i) {
                    const std::size_t per_phi = plan.rates.size() * r;
                    const std::size_t slot = (pi * per_phi + ri * r + i) * m + mi;
                    if (failed[slot]) {
                        ++cell_failed;
                        continue;
                    }
                    cell.push_back(ReplicateResult{plan.phi[pi], plan.rates[ri], plan.methods[mi],
                                                   i, scores[slot],
                                                   replicate_seed(plan.master_seed, pi, ri, i)});
                }
                if (cell_failed * 10 > r)
                    throw GridError("grid cell phi=" + fmt(plan.phi[pi]) +
                                    " dropout=" + fmt(plan.rates[ri]) + " method=" +
                                    to_string(plan.methods[mi]) + ": " +
                                    std::to_string(cell_failed) + " of " + std::to_string(r) +
                                    " replicates failed");
                if (cell_failed > 0)
                    out.failures.push_back(CellFailureCount{plan.phi[pi], plan.rates[ri],
                                                            plan.methods[mi], cell_failed});
                out.aggregates.push_back(aggregate(cell));
                out.replicates.insert(out.replicates.end(), cell.begin(), cell.end());
            }
        }
    }
    return out;
}

}  // namespace

std::string to_string(BaselineMode baseline) {
    return baseline == BaselineMode::TheoreticalPhi ? "theoretical" : "sample";
}

BaselineMode parse_baseline(std::string_view name) {
    if (name == "theoretical") return BaselineMode::TheoreticalPhi;
    if (name == "sample") return BaselineMode::UncorruptedSamplePacf;
    throw std::invalid_argument("unknown baseline '" + std::string(name) +
                                "' (expected sample or theoretical)");
}

void validate(const ExperimentConfig& config) {
    if (config.phi_grid.empty()) throw ConfigError("phi_grid: must be non-empty");
    for (double phi : config.phi_grid)
        if (!(phi > -1.0 && phi < 1.0))
            throw ConfigError("phi_grid: value " + fmt(phi) + " outside (-1, 1)");
    if (has_duplicate(config.phi_grid)) throw ConfigError("phi_grid: contains duplicates");

    if (config.series_length < 4) throw ConfigError("series_length: must be >= 4");
    if (config.replicates < 1) throw ConfigError("replicates: must be >= 1");

    if (config.dropout_grid.empty()) throw ConfigError("dropout_grid: must be non-empty");
    for (double rate : config.dropout_grid) {
        if (!(rate >= 0.0 && rate < 1.0))
            throw ConfigError("dropout_grid: rate " + fmt(rate) + " outside [0, 1)");
        try {
            (void)missing_count(rate, config.series_length);
        } catch (const std::invalid_argument&) {
            throw ConfigError("dropout_grid: rate " + fmt(rate) +
                              " drops every value at series_length " +
                              std::to_string(config.series_length));
        }
    }
    if (has_duplicate(config.dropout_grid)) throw ConfigError("dropout_grid: contains duplicates");

    if (config.methods.empty()) throw ConfigError("methods: must be non-empty");
    if (has_duplicate(config.methods)) throw ConfigError("methods: contains duplicates");
}

ExperimentConfig figures_preset() {
    ExperimentConfig config;
    for (int i = -9; i <= 9; ++i)
        if (i != 0) config.phi_grid.push_back(static_cast<double>(i) / 10.0);
    config.dropout_grid = {0.10, 0.15, 0.20, 0.25};
    return config;
}

ExperimentConfig methodology_preset() {
    ExperimentConfig config;
    for (int i = 1; i <= 9; ++i) config.phi_grid.push_back(static_cast<double>(i) / 10.0);
    config.dropout_grid = {0.05, 0.10, 0.20, 0.30};
    return config;
}

ExperimentConfig preset_by_name(std::string_view name) {
    if (name == "figures") return figures_preset();
    if (name == "methodology") return methodology_preset();
    throw ConfigError("unknown preset '" + std::string(name) +
                      "' (expected figures or methodology)");
}

std::uint64_t replicate_seed(std::uint64_t master_seed, std::size_t phi_index,
                             std::size_t rate_index, std::size_t replicate_index) {
    return derive_seed(master_seed,
                       {static_cast<std::uint64_t>(phi_index), static_cast<std::uint64_t>(rate_index),
                        static_cast<std::uint64_t>(replicate_index)});
}

ReplicateResult run_replicate(const ArModel& model, const DropoutSpec& dropout, FillMethod method,
                              const SimulationSpec& sim, BaselineMode baseline,
                              PacfEstimator estimator, Normalization normalization) {
    const Series original = simulate(SimulationSpec{sim.length, sim.seed, model});
    const double reference = (baseline == BaselineMode::TheoreticalPhi)
                                 ? theoretical_pacf(model, 1)[0]
                                 : sample_pacf1(original, estimator, normalization);
    const MaskedSeries masked = drop_values(original, dropout);
    const Series restored = impute(masked, method);
    const double score = accuracy_score(restored, reference, estimator, normalization);
    return ReplicateResult{model.coefficients[0], dropout.rate, method, 0, score, sim.seed};
}

AggregateResult aggregate(const std::vector<ReplicateResult>& results) {
    if (results.empty()) throw std::invalid_argument("aggregate: empty result list");
    const ReplicateResult& first = results.front();
    for (const ReplicateResult& rr : results)
        if (rr.phi != first.phi || rr.dropout != first.dropout || rr.method != first.method)
            throw std::invalid_argument("aggregate: results span more than one cell");

    const std::size_t count = results.size();
    double sum = 0.0;
    for (const ReplicateResult& rr : results) sum += rr.score;
    const double mean = sum / static_cast<double>(count);
    double varsum = 0.0;
    for (const ReplicateResult& rr : results) varsum += (rr.score - mean) * (rr.score - mean);
    const bool std_defined = count > 1;
    const double stddev = std_defined ? std::sqrt(varsum / static_cast<double>(count - 1)) : 0.0;
    return AggregateResult{first.phi, first.dropout, first.method, mean, stddev, count, std_defined};
}

GridResult run_grid_serial(const ExperimentConfig& config) {
    validate(config);
    const Plan plan = make_plan(config);
    const std::size_t m = plan.methods.size();
    const std::size_t units = plan.phi.size() * plan.rates.size() * plan.replicates;
    std::vector<double> scores(units * m, 0.0);
    std::vector<unsigned char> failed(units * m, 0);
    for (std::size_t u = 0; u < units; ++u) execute_unit(plan, u, &scores[u * m], &failed[u * m]);
    return assemble(plan, scores, failed);
}

GridResult run_grid(const ExperimentConfig& config) {
#ifdef _OPENMP
    validate(config);
    const Plan plan = make_plan(config);
    const std::size_t m = plan.methods.size();
    const std::size_t units = plan.phi.size() * plan.rates.size() * plan.replicates;
    std::vector<double> scores(units * m, 0.0);
    std::vector<unsigned char> failed(units * m, 0);
    std::atomic<bool> aborted{false};
    std::exception_ptr error;
    const auto total = static_cast<long long>(units);
#pragma omp parallel for schedule(dynamic, 16)
    for (long long u = 0; u < total; ++u) {
        if (aborted.load(std::memory_order_relaxed)) continue;
        try {
            const auto slot = static_cast<std::size_t>(u) * m;
            execute_unit(plan, static_cast<std::size_t>(u), &scores[slot], &failed[slot]);
        } catch (...) {
#pragma omp critical(tsfill_grid_abort)
            {
                if (!aborted.exchange(true)) error = std::current_exception();
            }
        }
    }
    if (error) std::rethrow_exception(error);
    return assemble(plan, scores, failed);
#else
    return run_grid_serial(config);
#endif
}

}  // namespace tsfill
