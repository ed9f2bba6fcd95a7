#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "tsfill/ar_process.hpp"
#include "tsfill/corruption.hpp"

using namespace tsfill;

TEST_SUITE("corruption") {

TEST_CASE("missing count rounds half to even") {
    CHECK(missing_count(0.20, 100) == 20);
    CHECK(missing_count(0.0, 10) == 0);
    CHECK(missing_count(0.25, 10) == 2);   // 2.5 -> 2
    CHECK(missing_count(0.75, 10) == 8);   // 7.5 -> 8
    CHECK(missing_count(0.25, 6) == 2);    // 1.5 -> 2
    CHECK(missing_count(0.125, 4) == 0);   // 0.5 -> 0
    CHECK(missing_count(0.375, 4) == 2);   // 1.5 -> 2
    CHECK(missing_count(0.15, 500) == 75);
}

TEST_CASE("missing count rejects dropping everything") {
    CHECK_THROWS_AS((void)missing_count(0.95, 10), std::invalid_argument);  // 9.5 -> 10
    CHECK_THROWS_AS((void)missing_count(-0.1, 10), std::invalid_argument);
    CHECK_THROWS_AS((void)missing_count(1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS((void)missing_count(0.5, 0), std::invalid_argument);
}

TEST_CASE("drop_values removes exactly the rounded count") {
    const Series x = simulate(SimulationSpec{100, 3, ArModel{{0.4}, 1.0}});
    const MaskedSeries masked = drop_values(x, DropoutSpec{0.20, 9});
    CHECK(masked.missing().size() == 20);
    CHECK(masked.observed_count() == 80);
    for (std::size_t i : masked.missing()) CHECK(std::isnan(masked.values()[i]));
}

TEST_CASE("observed values are unchanged bit-exact") {
    const Series x = simulate(SimulationSpec{50, 4, ArModel{{0.4}, 1.0}});
    const MaskedSeries masked = drop_values(x, DropoutSpec{0.30, 10});
    const auto mask = masked.missing_mask();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!mask[i]) CHECK(masked.values()[i] == x[i]);
}

TEST_CASE("zero rate leaves the series untouched") {
    const Series x = simulate(SimulationSpec{40, 5, ArModel{{0.2}, 1.0}});
    const MaskedSeries masked = drop_values(x, DropoutSpec{0.0, 1});
    CHECK(masked.missing().empty());
    CHECK(masked.complete());
    CHECK(masked.values() == x);
}

TEST_CASE("selection is deterministic in the seed") {
    const Series x = simulate(SimulationSpec{80, 6, ArModel{{0.4}, 1.0}});
    CHECK(drop_values(x, DropoutSpec{0.25, 123}).missing() ==
          drop_values(x, DropoutSpec{0.25, 123}).missing());
    CHECK(drop_values(x, DropoutSpec{0.25, 123}).missing() !=
          drop_values(x, DropoutSpec{0.25, 124}).missing());
}

TEST_CASE("missing indices are sorted, unique, in range") {
    const Series x = simulate(SimulationSpec{64, 7, ArModel{{0.4}, 1.0}});
    const MaskedSeries masked = drop_values(x, DropoutSpec{0.5, 42});
    const auto& missing = masked.missing();
    for (std::size_t i = 1; i < missing.size(); ++i) CHECK(missing[i - 1] < missing[i]);
    CHECK(missing.back() < x.size());
}

TEST_CASE("every index is dropped with roughly uniform frequency") {
    const Series x = simulate(SimulationSpec{20, 8, ArModel{{0.4}, 1.0}});
    std::vector<std::size_t> hits(20, 0);
    const std::size_t trials = 10000;
    for (std::size_t seed = 0; seed < trials; ++seed) {
        const MaskedSeries masked = drop_values(x, DropoutSpec{0.25, seed});
        for (std::size_t i : masked.missing()) ++hits[i];
    }
    for (std::size_t i = 0; i < hits.size(); ++i) {
        const double freq = static_cast<double>(hits[i]) / static_cast<double>(trials);
        CHECK(freq == doctest::Approx(0.25).epsilon(0.08));  // 0.25 +/- 0.02
    }
}

TEST_CASE("drop_values rejects incomplete input") {
    Series x = {1.0, 2.0, std::nan(""), 4.0};
    CHECK_THROWS_AS((void)drop_values(x, DropoutSpec{0.25, 1}), std::invalid_argument);
}

}  // TEST_SUITE
