#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "ddosml/feature_matrix.hpp"
#include "ddosml/predictions.hpp"

namespace ddosml {

struct GnbModel {
    std::array<double, 2> prior{};
    std::array<std::vector<double>, 2> mean;
    std::array<std::vector<double>, 2> variance; // population variance + var_smoothing
    double var_smoothing = 0.0;

    std::size_t feature_count() const noexcept { return mean[0].size(); }
};

// Throws FitError when either class is absent.
GnbModel fit_gnb(const FeatureMatrix& train);

// Posterior over {benign, ddos} for one row, normalized in log space.
std::array<double, 2> gnb_posterior(const GnbModel& m, std::span<const double> row);

// Label is the argmax posterior with ties going to class 0.
Predictions predict_gnb(const GnbModel& m, const FeatureMatrix& rows);

} // namespace ddosml
