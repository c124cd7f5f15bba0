#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ddosml/feature_matrix.hpp"
#include "ddosml/predictions.hpp"

namespace ddosml {

struct GbtParams {
    std::size_t n_rounds = 100;
    std::size_t max_depth = 6;
    double learning_rate = 0.3;
    double lambda = 1.0;           // L2 penalty on leaf weights
    double gamma = 0.0;            // minimum gain for a split
    double min_child_weight = 1.0; // minimum hessian sum per child

    bool operator==(const GbtParams&) const = default;
};

// Throws ArgumentError on a learning rate outside (0, 1] or negative penalties.
void validate(const GbtParams& p);

// Flat binary tree. Rows with x[feature] < threshold go left. Leaves carry the
// raw weight -G/(H+lambda); the learning rate is applied by the ensemble.
struct RegressionTree {
    struct Node {
        std::int32_t feature = -1; // -1 marks a leaf
        double threshold = 0.0;
        std::int32_t left = -1;
        std::int32_t right = -1;
        double weight = 0.0;

        bool is_leaf() const noexcept { return feature < 0; }
        bool operator==(const Node&) const = default;
    };

    std::vector<Node> nodes; // nodes[0] is the root

    double evaluate(std::span<const double> row) const;
    std::size_t depth() const;
    bool operator==(const RegressionTree&) const = default;
};

struct GbtModel {
    std::vector<RegressionTree> trees;
    double base_logit = 0.0;
    GbtParams params;
    std::size_t feature_count = 0;
};

// Second-order boosting on the logistic loss with exact greedy splits at
// midpoints between consecutive distinct values.
GbtModel fit_gbt(const FeatureMatrix& train, const GbtParams& params = {});

// base_logit + learning_rate * sum of the first `n_trees` tree outputs
// (all trees when n_trees exceeds the ensemble size).
std::vector<double> predict_gbt_logits(const GbtModel& m, const FeatureMatrix& rows,
                                       std::size_t n_trees = SIZE_MAX);

Predictions predict_gbt(const GbtModel& m, const FeatureMatrix& rows);

} // namespace ddosml
