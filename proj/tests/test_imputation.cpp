#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"
#include "tsfill/imputation.hpp"
#include "tsfill/rng.hpp"

using namespace tsfill;
using tsfill::testutil::masked_of;

namespace {

MaskedSeries reversed_masked(const MaskedSeries& s) {
    Series values(s.values().rbegin(), s.values().rend());
    return MaskedSeries::from_nan_markers(std::move(values));
}

}  // namespace

TEST_SUITE("imputation") {

TEST_CASE("forward fill propagates the previous value") {
    CHECK(forward_fill(masked_of({1.0, std::nullopt, 3.0})) == Series{1.0, 1.0, 3.0});
    CHECK(forward_fill(masked_of({std::nullopt, std::nullopt, 5.0, std::nullopt})) ==
          Series{5.0, 5.0, 5.0, 5.0});
    CHECK(forward_fill(masked_of({2.0, std::nullopt, std::nullopt, 7.0})) ==
          Series{2.0, 2.0, 2.0, 7.0});
}

TEST_CASE("backward fill propagates the next value") {
    CHECK(backward_fill(masked_of({1.0, std::nullopt, 3.0})) == Series{1.0, 3.0, 3.0});
    CHECK(backward_fill(masked_of({std::nullopt, 5.0, std::nullopt, std::nullopt})) ==
          Series{5.0, 5.0, 5.0, 5.0});
    CHECK(backward_fill(masked_of({2.0, std::nullopt, std::nullopt, 7.0})) ==
          Series{2.0, 7.0, 7.0, 7.0});
}

TEST_CASE("mean fill uses the mean of observed values only") {
    CHECK(mean_fill(masked_of({1.0, std::nullopt, 3.0})) == Series{1.0, 2.0, 3.0});
    CHECK(mean_fill(masked_of({4.0, 4.0, std::nullopt, 4.0})) == Series{4.0, 4.0, 4.0, 4.0});
    CHECK(mean_fill(masked_of({1.0, std::nullopt, 2.0, std::nullopt, 6.0})) ==
          Series{1.0, 3.0, 2.0, 3.0, 6.0});
}

TEST_CASE("impute dispatches to the chosen method") {
    const MaskedSeries s = masked_of({2.0, std::nullopt, std::nullopt, 7.0});
    CHECK(impute(s, FillMethod::ForwardFill) == forward_fill(s));
    CHECK(impute(s, FillMethod::BackwardFill) == backward_fill(s));
    CHECK(impute(s, FillMethod::MeanFill) == mean_fill(s));
    CHECK(impute(masked_of({1.0, std::nullopt, 3.0}), FillMethod::MeanFill) ==
          Series{1.0, 2.0, 3.0});
}

TEST_CASE("a complete series passes through unchanged") {
    const MaskedSeries s = masked_of({1.5, 2.5, 3.5});
    for (FillMethod m : kAllFillMethods) CHECK(impute(s, m) == Series{1.5, 2.5, 3.5});
}

TEST_CASE("a single observed value yields a constant series") {
    const MaskedSeries s = masked_of({std::nullopt, std::nullopt, 3.25, std::nullopt});
    for (FillMethod m : kAllFillMethods) CHECK(impute(s, m) == Series{3.25, 3.25, 3.25, 3.25});
}

TEST_CASE("an all-missing series cannot be represented") {
    Series nans(4, std::numeric_limits<double>::quiet_NaN());
    CHECK_THROWS_AS((void)MaskedSeries::from_nan_markers(nans), std::invalid_argument);
    CHECK_THROWS_AS((void)MaskedSeries::from_missing_indices({1.0, 2.0}, {0, 1}),
                    std::invalid_argument);
}

TEST_CASE("method names round-trip") {
    for (FillMethod m : kAllFillMethods) CHECK(parse_fill_method(to_string(m)) == m);
    CHECK(to_string(FillMethod::ForwardFill) == "forward_fill");
    CHECK(to_string(FillMethod::BackwardFill) == "backward_fill");
    CHECK(to_string(FillMethod::MeanFill) == "mean_fill");
    CHECK_THROWS_AS((void)parse_fill_method("linear"), std::invalid_argument);
}

TEST_CASE("random masked series satisfy the fill properties") {
    std::mt19937_64 engine(2024);
    GaussianStream values(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + uniform_below(engine, 40);
        const std::size_t k = uniform_below(engine, n);  // at most n-1 missing
        Series x(n);
        for (double& v : x) v = values.next();
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        for (std::size_t i = 0; i < k; ++i)
            std::swap(idx[i], idx[i + uniform_below(engine, n - i)]);
        idx.resize(k);
        const MaskedSeries s = MaskedSeries::from_missing_indices(x, idx);
        const auto mask = s.missing_mask();

        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask[i]) continue;
            lo = std::min(lo, x[i]);
            hi = std::max(hi, x[i]);
        }

        for (FillMethod m : kAllFillMethods) {
            const Series filled = impute(s, m);
            REQUIRE(filled.size() == n);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK_FALSE(std::isnan(filled[i]));             // completeness
                if (!mask[i]) CHECK(filled[i] == x[i]);         // conservativity
                if (mask[i]) {
                    CHECK(filled[i] >= lo);                     // range containment
                    CHECK(filled[i] <= hi);
                }
            }
            const MaskedSeries complete =
                MaskedSeries::from_missing_indices(filled, {});
            CHECK(impute(complete, m) == filled);               // idempotence
        }

        // Mirror identity: backward fill of the reversal reverses forward fill.
        const Series forward = forward_fill(s);
        Series mirrored = backward_fill(reversed_masked(s));
        std::reverse(mirrored.begin(), mirrored.end());
        CHECK(mirrored == forward);
    }
}

}  // TEST_SUITE
