#include "ddosml/sgd.hpp"

#include <cmath>
#include <numeric>

#include "ddosml/error.hpp"
#include "ddosml/logistic.hpp"
#include "ddosml/random.hpp"

namespace ddosml {
namespace {

double linear(std::span<const double> w, double b, std::span<const double> x) {
    double z = b;
    for (std::size_t j = 0; j < w.size(); ++j) {
        z += w[j] * x[j];
    }
    return z;
}

} // namespace

void validate(const SgdParams& p) {
    if (!(p.learning_rate > 0.0) || !std::isfinite(p.learning_rate)) {
        throw ArgumentError("SGD learning_rate must be positive");
    }
    if (!(p.l2 >= 0.0)) {
        throw ArgumentError("SGD l2 must be non-negative");
    }
}

double sgd_sample_objective(std::span<const double> weights, double bias,
                            std::span<const double> x, int y, double l2) {
    double norm2 = 0.0;
    for (double w : weights) {
        norm2 += w * w;
    }
    return logistic::loss(linear(weights, bias, x), y) + 0.5 * l2 * norm2;
}

std::vector<double> sgd_sample_gradient(std::span<const double> weights, double bias,
                                        std::span<const double> x, int y, double l2) {
    const double err = logistic::gradient(linear(weights, bias, x), y);
    std::vector<double> g(weights.size() + 1);
    for (std::size_t j = 0; j < weights.size(); ++j) {
        g[j] = err * x[j] + l2 * weights[j];
    }
    g.back() = err;
    return g;
}

SgdLinearModel fit_sgd(const FeatureMatrix& train, const SgdParams& params) {
    validate(params);
    if (train.rows() == 0) {
        throw FitError("SGD: empty training set");
    }
    const auto& y = train.labels();
    require_binary(y);

    SgdLinearModel m;
    m.params = params;
    m.weights.assign(train.cols(), 0.0);

    Rng rng(params.seed);
    std::vector<std::size_t> order(train.rows());
    const double eta = params.learning_rate;
    for (std::size_t epoch = 0; epoch < params.epochs; ++epoch) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        rng.shuffle(std::span<std::size_t>(order));
        for (auto i : order) {
            auto x = train.row(i);
            const double err = logistic::gradient(linear(m.weights, m.bias, x), y[i]);
            for (std::size_t j = 0; j < m.weights.size(); ++j) {
                m.weights[j] -= eta * (err * x[j] + params.l2 * m.weights[j]);
            }
            m.bias -= eta * err;
        }
    }
    return m;
}

Predictions predict_sgd(const SgdLinearModel& m, const FeatureMatrix& rows) {
    if (rows.cols() != m.weights.size()) {
        throw ShapeError("SGD model expects " + std::to_string(m.weights.size()) + " features, got " +
                         std::to_string(rows.cols()));
    }
    Predictions p;
    p.probability.resize(rows.rows());
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        p.probability[r] = logistic::sigmoid(linear(m.weights, m.bias, rows.row(r)));
    }
    p.labels = threshold_labels(p.probability);
    return p;
}

} // namespace ddosml
