#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "tsfill/experiment.hpp"
#include "tsfill/rng.hpp"

using namespace tsfill;

namespace {

ExperimentConfig small_config() {
    ExperimentConfig config;
    config.phi_grid = {-0.3, 0.4};
    config.dropout_grid = {0.1, 0.2};
    config.replicates = 5;
    config.series_length = 50;
    config.master_seed = 7;
    return config;
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("config validation names the offending field") {
    auto check_throws_with = [](const ExperimentConfig& config, const std::string& needle) {
        try {
            validate(config);
            FAIL(("expected ConfigError for " + needle));
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    ExperimentConfig config = small_config();
    validate(config);  // baseline sanity

    config.phi_grid = {};
    check_throws_with(config, "phi_grid");
    config.phi_grid = {1.2};
    check_throws_with(config, "phi_grid");
    config.phi_grid = {0.4, 0.4};
    check_throws_with(config, "phi_grid");

    config = small_config();
    config.dropout_grid = {};
    check_throws_with(config, "dropout_grid");
    config.dropout_grid = {1.0};
    check_throws_with(config, "dropout_grid");
    config.dropout_grid = {0.1, 0.1};
    check_throws_with(config, "dropout_grid");

    config = small_config();
    config.series_length = 10;
    config.dropout_grid = {0.95};  // rounds to 10 dropped of 10
    check_throws_with(config, "dropout_grid");

    config = small_config();
    config.replicates = 0;
    check_throws_with(config, "replicates");

    config = small_config();
    config.series_length = 3;
    check_throws_with(config, "series_length");

    config = small_config();
    config.methods = {};
    check_throws_with(config, "methods");
    config.methods = {FillMethod::MeanFill, FillMethod::MeanFill};
    check_throws_with(config, "methods");
}

TEST_CASE("presets match their documented grids") {
    const ExperimentConfig figures = figures_preset();
    REQUIRE(figures.phi_grid.size() == 18);
    CHECK(figures.phi_grid.front() == doctest::Approx(-0.9));
    CHECK(figures.phi_grid.back() == doctest::Approx(0.9));
    for (double phi : figures.phi_grid) CHECK(phi != 0.0);
    CHECK(figures.dropout_grid == std::vector<double>{0.10, 0.15, 0.20, 0.25});
    CHECK(figures.replicates == 100);
    CHECK(figures.series_length == 500);
    CHECK(figures.baseline == BaselineMode::UncorruptedSamplePacf);
    CHECK(figures.estimator == PacfEstimator::YuleWalker);
    CHECK(figures.normalization == Normalization::Unbiased);
    validate(figures);

    const ExperimentConfig methodology = methodology_preset();
    REQUIRE(methodology.phi_grid.size() == 9);
    CHECK(methodology.phi_grid.front() == doctest::Approx(0.1));
    CHECK(methodology.dropout_grid == std::vector<double>{0.05, 0.10, 0.20, 0.30});
    validate(methodology);

    CHECK_THROWS_AS((void)preset_by_name("nope"), ConfigError);
}

TEST_CASE("baseline names round-trip") {
    CHECK(parse_baseline("sample") == BaselineMode::UncorruptedSamplePacf);
    CHECK(parse_baseline("theoretical") == BaselineMode::TheoreticalPhi);
    CHECK(to_string(BaselineMode::UncorruptedSamplePacf) == "sample");
    CHECK(to_string(BaselineMode::TheoreticalPhi) == "theoretical");
    CHECK_THROWS_AS((void)parse_baseline("exact"), std::invalid_argument);
}

TEST_CASE("replicate seeds are distinct across the grid") {
    std::set<std::uint64_t> seeds;
    for (std::size_t pi = 0; pi < 18; ++pi)
        for (std::size_t ri = 0; ri < 4; ++ri)
            for (std::size_t i = 0; i < 100; ++i)
                seeds.insert(replicate_seed(42, pi, ri, i));
    CHECK(seeds.size() == 18u * 4u * 100u);
}

TEST_CASE("aggregate computes mean and sample standard deviation") {
    auto rep = [](double score) {
        return ReplicateResult{0.4, 0.1, FillMethod::MeanFill, 0, score, 0};
    };
    const AggregateResult two = aggregate({rep(0.1), rep(0.3)});
    CHECK(two.mean_score == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(two.std_score == doctest::Approx(std::sqrt(0.02)).epsilon(1e-12));
    CHECK(two.replicates == 2);
    CHECK(two.std_defined);

    const AggregateResult constant = aggregate({rep(0.25), rep(0.25), rep(0.25)});
    CHECK(constant.mean_score == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(constant.std_score == 0.0);

    const AggregateResult triple = aggregate({rep(0.135), rep(0.163), rep(0.014)});
    CHECK(triple.mean_score == doctest::Approx(0.104).epsilon(1e-12));
    CHECK(triple.std_score == doctest::Approx(0.0791896).epsilon(1e-4));

    const AggregateResult single = aggregate({rep(0.5)});
    CHECK(single.mean_score == 0.5);
    CHECK(single.std_score == 0.0);
    CHECK_FALSE(single.std_defined);
    CHECK(single.replicates == 1);

    CHECK_THROWS_AS((void)aggregate({}), std::invalid_argument);
    auto other = rep(0.1);
    other.dropout = 0.2;
    CHECK_THROWS_AS((void)aggregate({rep(0.1), other}), std::invalid_argument);
}

TEST_CASE("zero dropout scores zero under the sample baseline") {
    const ArModel model{{0.4}, 1.0};
    const SimulationSpec sim{100, 99, model};
    for (FillMethod m : kAllFillMethods) {
        const ReplicateResult r =
            run_replicate(model, DropoutSpec{0.0, 5}, m, sim,
                          BaselineMode::UncorruptedSamplePacf, PacfEstimator::YuleWalker,
                          Normalization::Unbiased);
        CHECK(r.score == 0.0);
    }
}

TEST_CASE("run_replicate is deterministic") {
    const ArModel model{{0.6}, 1.0};
    const SimulationSpec sim{80, 3, model};
    const auto a = run_replicate(model, DropoutSpec{0.2, 9}, FillMethod::ForwardFill, sim,
                                 BaselineMode::UncorruptedSamplePacf, PacfEstimator::YuleWalker,
                                 Normalization::Unbiased);
    const auto b = run_replicate(model, DropoutSpec{0.2, 9}, FillMethod::ForwardFill, sim,
                                 BaselineMode::UncorruptedSamplePacf, PacfEstimator::YuleWalker,
                                 Normalization::Unbiased);
    CHECK(a.score == b.score);
    CHECK(a.score > 0.0);
    CHECK(a.score <= 2.0);
}

TEST_CASE("near-white-noise mean fill scores near zero against phi") {
    const ArModel model{{0.0}, 1.0};
    const SimulationSpec sim{100000, 17, model};
    const auto r = run_replicate(model, DropoutSpec{0.10, 23}, FillMethod::MeanFill, sim,
                                 BaselineMode::TheoreticalPhi, PacfEstimator::YuleWalker,
                                 Normalization::Unbiased);
    CHECK(r.score < 0.02);
}

TEST_CASE("grid output is lexicographic and complete") {
    const GridResult result = run_grid(small_config());
    REQUIRE(result.aggregates.size() == 2u * 2u * 3u);
    REQUIRE(result.replicates.size() == 2u * 2u * 3u * 5u);
    CHECK(result.failures.empty());
    for (std::size_t i = 1; i < result.aggregates.size(); ++i) {
        const auto& a = result.aggregates[i - 1];
        const auto& b = result.aggregates[i];
        const bool ordered = a.phi < b.phi || (a.phi == b.phi && a.dropout < b.dropout) ||
                             (a.phi == b.phi && a.dropout == b.dropout &&
                              static_cast<int>(a.method) < static_cast<int>(b.method));
        CHECK(ordered);
    }
    for (const auto& a : result.aggregates) {
        CHECK(a.replicates == 5);
        CHECK(a.mean_score >= 0.0);
        CHECK(a.std_score >= 0.0);
    }
    for (const auto& r : result.replicates) {
        CHECK(r.score >= 0.0);
        CHECK(r.score <= 2.0);
    }
}

TEST_CASE("grid results are independent of the input grid order") {
    ExperimentConfig shuffled = small_config();
    std::swap(shuffled.phi_grid[0], shuffled.phi_grid[1]);
    std::swap(shuffled.dropout_grid[0], shuffled.dropout_grid[1]);
    CHECK(run_grid(shuffled).aggregates == run_grid(small_config()).aggregates);
}

TEST_CASE("parallel and serial grids agree exactly") {
    ExperimentConfig config = small_config();
    config.replicates = 20;
    const GridResult parallel = run_grid(config);
    const GridResult serial = run_grid_serial(config);
    REQUIRE(parallel.aggregates.size() == serial.aggregates.size());
    CHECK(parallel.aggregates == serial.aggregates);
    REQUIRE(parallel.replicates.size() == serial.replicates.size());
    for (std::size_t i = 0; i < parallel.replicates.size(); ++i) {
        CHECK(parallel.replicates[i].score == serial.replicates[i].score);
        CHECK(parallel.replicates[i].replicate_seed == serial.replicates[i].replicate_seed);
    }
}

TEST_CASE("grid replicates match standalone run_replicate calls") {
    const ExperimentConfig config = small_config();
    const GridResult result = run_grid(config);
    // Sorted grids: phi index 1 is 0.4, rate index 0 is 0.1.
    const std::uint64_t rep_seed = replicate_seed(config.master_seed, 1, 0, 2);
    const ArModel model{{0.4}, 1.0};
    const auto standalone = run_replicate(
        model, DropoutSpec{0.1, derive_seed(rep_seed, {1})}, FillMethod::BackwardFill,
        SimulationSpec{config.series_length, derive_seed(rep_seed, {0}), model},
        config.baseline, config.estimator, config.normalization);
    bool found = false;
    for (const auto& r : result.replicates) {
        if (r.phi == 0.4 && r.dropout == 0.1 && r.method == FillMethod::BackwardFill &&
            r.replicate_index == 2) {
            CHECK(r.score == standalone.score);
            CHECK(r.replicate_seed == rep_seed);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("identical configs give identical grids") {
    const GridResult a = run_grid(small_config());
    const GridResult b = run_grid(small_config());
    CHECK(a.aggregates == b.aggregates);
}

TEST_CASE("a cell whose replicates degenerate raises GridError") {
    ExperimentConfig config;
    config.phi_grid = {0.5};
    config.dropout_grid = {0.75};
    config.replicates = 4;
    config.series_length = 4;  // three of four values dropped: restored series constant
    config.master_seed = 1;
    try {
        (void)run_grid(config);
        FAIL("expected GridError");
    } catch (const GridError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("0.5") != std::string::npos);
        CHECK(msg.find("0.75") != std::string::npos);
    }
}

TEST_CASE("degradation is monotone for forward fill at phi 0.9") {
    ExperimentConfig config;
    config.phi_grid = {0.9};
    config.dropout_grid = {0.10, 0.25};
    config.replicates = 100;
    config.series_length = 500;
    config.master_seed = 42;
    config.methods = {FillMethod::ForwardFill};
    const GridResult result = run_grid(config);
    REQUIRE(result.aggregates.size() == 2);
    CHECK(result.aggregates[1].mean_score >= result.aggregates[0].mean_score);
}

}  // TEST_SUITE
