#pragma once

#include <cstddef>
#include <vector>

#include "ddosml/feature_matrix.hpp"

namespace ddosml {

inline constexpr double default_feature_threshold = 0.05;

struct FeatureMask {
    std::vector<std::size_t> kept;  // strictly increasing, non-empty
    std::vector<double> scores;     // |pearson r| per input column, in [0, 1]

    bool operator==(const FeatureMask&) const = default;
};

struct ScalerParams {
    std::vector<double> min;
    std::vector<double> max;

    std::size_t size() const noexcept { return min.size(); }
    bool operator==(const ScalerParams&) const = default;
};

// Absolute Pearson correlation of a column against 0/1 labels; 0 when either
// side has zero variance.
double label_correlation(std::span<const double> column, std::span<const int> labels);

// Keeps columns whose |r| against the label reaches `threshold`. Falls back to
// the single best column (lowest index on ties) when none qualifies.
FeatureMask select_features(const FeatureMatrix& m, double threshold = default_feature_threshold);

FeatureMatrix apply_mask(const FeatureMask& mask, const FeatureMatrix& m);

ScalerParams fit_minmax(const FeatureMatrix& train);

// x' = (x - min) / (max - min); 0 for constant columns. No clamping, so test
// rows outside the training range land outside [0, 1].
FeatureMatrix transform_minmax(const ScalerParams& p, const FeatureMatrix& m);

} // namespace ddosml
