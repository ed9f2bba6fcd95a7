#include "tsfill/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace tsfill {

MaskedSeries::MaskedSeries(Series values, std::vector<std::size_t> missing)
    : values_(std::move(values)), missing_(std::move(missing)) {}

MaskedSeries MaskedSeries::from_missing_indices(Series values, std::vector<std::size_t> missing) {
    const std::size_t n = values.size();
    if (n == 0) throw std::invalid_argument("MaskedSeries: series must be non-empty");
    std::sort(missing.begin(), missing.end());
    if (std::adjacent_find(missing.begin(), missing.end()) != missing.end())
        throw std::invalid_argument("MaskedSeries: duplicate missing index");
    if (!missing.empty() && missing.back() >= n)
        throw std::invalid_argument("MaskedSeries: missing index " + std::to_string(missing.back()) +
                                    " out of range for length " + std::to_string(n));
    if (missing.size() >= n)
        throw std::invalid_argument("MaskedSeries: at least one value must remain observed");
    for (std::size_t i : missing) values[i] = std::numeric_limits<double>::quiet_NaN();
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (next < missing.size() && missing[next] == i) {
            ++next;
            continue;
        }
        if (std::isnan(values[i]))
            throw std::invalid_argument("MaskedSeries: observed value at index " +
                                        std::to_string(i) + " is NaN");
    }
    return MaskedSeries(std::move(values), std::move(missing));
}

MaskedSeries MaskedSeries::from_nan_markers(Series values) {
    std::vector<std::size_t> missing;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (std::isnan(values[i])) missing.push_back(i);
    }
    return from_missing_indices(std::move(values), std::move(missing));
}

std::vector<unsigned char> MaskedSeries::missing_mask() const {
    std::vector<unsigned char> mask(values_.size(), 0);
    for (std::size_t i : missing_) mask[i] = 1;
    return mask;
}

}  // namespace tsfill
