#include "tsfill/imputation.hpp"

#include <cmath>
#include <stdexcept>

namespace tsfill {

Series forward_fill(const MaskedSeries& series) {
    Series out = series.values();
    std::size_t first = 0;
    while (std::isnan(out[first])) ++first;
    for (std::size_t t = 0; t < first; ++t) out[t] = out[first];
    for (std::size_t t = first + 1; t < out.size(); ++t)
        if (std::isnan(out[t])) out[t] = out[t - 1];
    return out;
}

Series backward_fill(const MaskedSeries& series) {
    Series out = series.values();
    std::size_t last = out.size() - 1;
    while (std::isnan(out[last])) --last;
    for (std::size_t t = last + 1; t < out.size(); ++t) out[t] = out[last];
    for (std::size_t t = last; t-- > 0;)
        if (std::isnan(out[t])) out[t] = out[t + 1];
    return out;
}

Series mean_fill(const MaskedSeries& series) {
    Series out = series.values();
    double sum = 0.0;
    for (double v : out)
        if (!std::isnan(v)) sum += v;
    const double mean = sum / static_cast<double>(series.observed_count());
    for (double& v : out)
        if (std::isnan(v)) v = mean;
    return out;
}

Series impute(const MaskedSeries& series, FillMethod method) {
    switch (method) {
        case FillMethod::ForwardFill: return forward_fill(series);
        case FillMethod::BackwardFill: return backward_fill(series);
        case FillMethod::MeanFill: return mean_fill(series);
    }
    throw std::invalid_argument("impute: unknown fill method");
}

std::string to_string(FillMethod method) {
    switch (method) {
        case FillMethod::ForwardFill: return "forward_fill";
        case FillMethod::BackwardFill: return "backward_fill";
        case FillMethod::MeanFill: return "mean_fill";
    }
    throw std::invalid_argument("to_string: unknown fill method");
}

FillMethod parse_fill_method(std::string_view name) {
    if (name == "forward_fill") return FillMethod::ForwardFill;
    if (name == "backward_fill") return FillMethod::BackwardFill;
    if (name == "mean_fill") return FillMethod::MeanFill;
    throw std::invalid_argument("unknown fill method '" + std::string(name) +
                                "' (expected forward_fill, backward_fill, or mean_fill)");
}

}  // namespace tsfill
