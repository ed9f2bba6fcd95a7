#include "tsfill/corruption.hpp"

#include <cfenv>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "tsfill/rng.hpp"

namespace tsfill {

std::size_t missing_count(double rate, std::size_t length) {
    if (!(rate >= 0.0 && rate < 1.0))
        throw std::invalid_argument("DropoutSpec: rate must lie in [0, 1)");
    if (length == 0) throw std::invalid_argument("missing_count: series must be non-empty");
    // nearbyint rounds half to even under the default FE_TONEAREST mode.
    const double rounded = std::nearbyint(rate * static_cast<double>(length));
    const auto count = static_cast<std::size_t>(rounded);
    if (count >= length)
        throw std::invalid_argument("DropoutSpec: rate " + std::to_string(rate) +
                                    " would drop every value of a length-" +
                                    std::to_string(length) + " series");
    return count;
}

MaskedSeries drop_values(const Series& series, const DropoutSpec& spec) {
    for (double v : series)
        if (std::isnan(v))
            throw std::invalid_argument("drop_values: input series must be complete");
    const std::size_t n = series.size();
    const std::size_t k = missing_count(spec.rate, n);

    // Partial Fisher-Yates shuffle: the first k slots form a uniform
    // without-replacement draw over all indices.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::mt19937_64 engine(spec.seed);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(uniform_below(engine, n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return MaskedSeries::from_missing_indices(series, std::move(idx));
}

}  // namespace tsfill
