#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ddosml/feature_matrix.hpp"
#include "ddosml/predictions.hpp"

namespace ddosml {

struct SgdParams {
    double learning_rate = 0.01;
    std::size_t epochs = 20;
    double l2 = 1e-4;
    std::uint64_t seed = 0;

    bool operator==(const SgdParams&) const = default;
};

void validate(const SgdParams& p);

struct SgdLinearModel {
    std::vector<double> weights;
    double bias = 0.0;
    SgdParams params;
};

// Per-sample objective: logistic loss of (w.x + b) plus (l2/2)|w|^2.
double sgd_sample_objective(std::span<const double> weights, double bias,
                            std::span<const double> x, int y, double l2);

// Analytic gradient of sgd_sample_objective. Returns weights.size() + 1 values;
// the last one is d/d(bias).
std::vector<double> sgd_sample_gradient(std::span<const double> weights, double bias,
                                        std::span<const double> x, int y, double l2);

// Plain per-sample SGD from a zero start, visiting rows in a freshly seeded
// shuffle each epoch.
SgdLinearModel fit_sgd(const FeatureMatrix& train, const SgdParams& params = {});

Predictions predict_sgd(const SgdLinearModel& m, const FeatureMatrix& rows);

} // namespace ddosml
