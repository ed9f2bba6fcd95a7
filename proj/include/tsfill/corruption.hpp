#pragma once

#include <cstddef>
#include <cstdint>

#include "tsfill/series.hpp"

namespace tsfill {

struct DropoutSpec {
    double rate = 0.0;  // fraction of values to drop, in [0, 1)
    std::uint64_t seed = 0;
};

/// Number of values dropped at a given rate: round-half-to-even of rate * length.
/// Throws std::invalid_argument when the count would leave nothing observed.
[[nodiscard]] std::size_t missing_count(double rate, std::size_t length);

/** Drop a uniform random subset of exactly missing_count(rate, n) indices.
 *
 * Endpoints are eligible. Observed values are unchanged; the selection is a
 * pure function of spec.seed.
 */
[[nodiscard]] MaskedSeries drop_values(const Series& series, const DropoutSpec& spec);

}  // namespace tsfill
