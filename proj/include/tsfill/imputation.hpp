#pragma once

#include <array>
#include <string>
#include <string_view>

#include "tsfill/series.hpp"

namespace tsfill {

enum class FillMethod { ForwardFill = 0, BackwardFill = 1, MeanFill = 2 };

inline constexpr std::array<FillMethod, 3> kAllFillMethods = {
    FillMethod::ForwardFill, FillMethod::BackwardFill, FillMethod::MeanFill};

/// Replace each missing value with the nearest earlier observed-or-filled
/// value; a leading gap takes the first observed value instead.
[[nodiscard]] Series forward_fill(const MaskedSeries& series);

/// Mirror of forward_fill: missing values take the nearest later value; a
/// trailing gap takes the last observed value.
[[nodiscard]] Series backward_fill(const MaskedSeries& series);

/// Replace every missing value with the mean of the observed values.
[[nodiscard]] Series mean_fill(const MaskedSeries& series);

[[nodiscard]] Series impute(const MaskedSeries& series, FillMethod method);

[[nodiscard]] std::string to_string(FillMethod method);
[[nodiscard]] FillMethod parse_fill_method(std::string_view name);

}  // namespace tsfill
