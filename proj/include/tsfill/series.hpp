#pragma once

#include <cstddef>
#include <vector>

namespace tsfill {

/// A complete (fully observed) time series.
using Series = std::vector<double>;

/**
 * A series with a known set of missing positions.
 *
 * Entries at missing positions hold quiet NaN so that accidental reads of
 * dropped values surface immediately; `missing()` is sorted, duplicate-free,
 * and never covers the whole series (at least one value stays observed).
 */
class MaskedSeries {
public:
    /// Build from values plus an explicit index set; entries at those indices
    /// are overwritten with NaN. Throws std::invalid_argument if an index is
    /// out of range, duplicated, or the whole series would be missing.
    static MaskedSeries from_missing_indices(Series values, std::vector<std::size_t> missing);

    /// Build from values where NaN already marks the missing entries.
    static MaskedSeries from_nan_markers(Series values);

    const Series& values() const noexcept { return values_; }
    const std::vector<std::size_t>& missing() const noexcept { return missing_; }

    std::size_t size() const noexcept { return values_.size(); }
    std::size_t observed_count() const noexcept { return values_.size() - missing_.size(); }
    bool complete() const noexcept { return missing_.empty(); }

    /// Per-index missingness flags (1 = missing).
    std::vector<unsigned char> missing_mask() const;

private:
    MaskedSeries(Series values, std::vector<std::size_t> missing);

    Series values_;
    std::vector<std::size_t> missing_;
};

}  // namespace tsfill
