#include "ddosml/preprocess.hpp"

#include <algorithm>
#include <cmath>

#include "ddosml/error.hpp"

namespace ddosml {

double label_correlation(std::span<const double> column, std::span<const int> labels) {
    const auto n = static_cast<double>(column.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < column.size(); ++i) {
        mean_x += column[i];
        mean_y += labels[i];
    }
    mean_x /= n;
    mean_y /= n;
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < column.size(); ++i) {
        const double dx = column[i] - mean_x;
        const double dy = labels[i] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0) {
        return 0.0;
    }
    return std::min(1.0, std::abs(sxy) / std::sqrt(sxx * syy));
}

FeatureMask select_features(const FeatureMatrix& m, double threshold) {
    if (!(threshold >= 0.0 && threshold < 1.0)) {
        throw ArgumentError("feature threshold must lie in [0, 1)");
    }
    if (m.rows() < 2) {
        throw ArgumentError("feature selection needs at least 2 rows");
    }
    const auto& labels = m.labels();
    require_binary(labels);

    FeatureMask mask;
    mask.scores.resize(m.cols());
    std::vector<double> column(m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            column[r] = m.at(r, c);
        }
        mask.scores[c] = label_correlation(column, labels);
        if (mask.scores[c] >= threshold) {
            mask.kept.push_back(c);
        }
    }
    if (mask.kept.empty()) {
        auto best = std::max_element(mask.scores.begin(), mask.scores.end());
        mask.kept.push_back(static_cast<std::size_t>(best - mask.scores.begin()));
    }
    return mask;
}

FeatureMatrix apply_mask(const FeatureMask& mask, const FeatureMatrix& m) {
    if (mask.scores.size() != m.cols()) {
        throw ShapeError("feature mask covers " + std::to_string(mask.scores.size()) +
                         " columns, matrix has " + std::to_string(m.cols()));
    }
    return m.take_cols(mask.kept);
}

ScalerParams fit_minmax(const FeatureMatrix& train) {
    if (train.rows() == 0) {
        throw ArgumentError("min-max scaler needs at least 1 row");
    }
    ScalerParams p;
    auto first = train.row(0);
    p.min.assign(first.begin(), first.end());
    p.max.assign(first.begin(), first.end());
    for (std::size_t r = 1; r < train.rows(); ++r) {
        auto row = train.row(r);
        for (std::size_t c = 0; c < row.size(); ++c) {
            p.min[c] = std::min(p.min[c], row[c]);
            p.max[c] = std::max(p.max[c], row[c]);
        }
    }
    return p;
}

FeatureMatrix transform_minmax(const ScalerParams& p, const FeatureMatrix& m) {
    if (p.size() != m.cols()) {
        throw ShapeError("scaler fitted on " + std::to_string(p.size()) + " columns, matrix has " +
                         std::to_string(m.cols()));
    }
    std::vector<double> out;
    out.reserve(m.values().size());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = m.row(r);
        for (std::size_t c = 0; c < row.size(); ++c) {
            const double range = p.max[c] - p.min[c];
            out.push_back(range > 0.0 ? (row[c] - p.min[c]) / range : 0.0);
        }
    }
    return {m.rows(), m.column_names(), std::move(out), m.maybe_labels()};
}

} // namespace ddosml
