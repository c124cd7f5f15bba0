#pragma once

#include <cstddef>
#include <span>

#include "ddosml/feature_matrix.hpp"
#include "ddosml/predictions.hpp"

namespace ddosml {

inline constexpr std::size_t default_knn_k = 5;

// Lazy learner: the training matrix (with labels) is stored verbatim.
struct KnnModel {
    std::size_t k = default_knn_k;
    FeatureMatrix points;
};

// Throws FitError unless 1 <= k <= train.rows().
KnnModel fit_knn(const FeatureMatrix& train, std::size_t k = default_knn_k);

double euclidean_distance(std::span<const double> a, std::span<const double> b);

// Majority vote among the k nearest points by Euclidean distance; ranking ties
// go to the lower training index, vote ties to the class with the smaller
// summed voter distance and then to class 0. Probability is votes_for_1 / k.
Predictions predict_knn(const KnnModel& m, const FeatureMatrix& rows);

} // namespace ddosml
