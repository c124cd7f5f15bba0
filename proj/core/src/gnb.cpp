#include "ddosml/gnb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ddosml/error.hpp"

namespace ddosml {

GnbModel fit_gnb(const FeatureMatrix& train) {
    const auto& y = train.labels();
    require_binary(y);
    const std::size_t d = train.cols();

    std::array<std::size_t, 2> count{};
    GnbModel m;
    for (int c = 0; c < 2; ++c) {
        m.mean[c].assign(d, 0.0);
        m.variance[c].assign(d, 0.0);
    }
    for (std::size_t r = 0; r < train.rows(); ++r) {
        const int c = y[r];
        ++count[c];
        auto row = train.row(r);
        for (std::size_t f = 0; f < d; ++f) {
            m.mean[c][f] += row[f];
        }
    }
    for (int c = 0; c < 2; ++c) {
        if (count[c] == 0) {
            throw FitError(std::string("GaussianNB: class ") + (c ? "ddos" : "benign") + " absent from training data");
        }
        for (auto& mu : m.mean[c]) {
            mu /= static_cast<double>(count[c]);
        }
    }
    for (std::size_t r = 0; r < train.rows(); ++r) {
        const int c = y[r];
        auto row = train.row(r);
        for (std::size_t f = 0; f < d; ++f) {
            const double dev = row[f] - m.mean[c][f];
            m.variance[c][f] += dev * dev;
        }
    }

    // Smoothing floor scales with the widest feature over the whole set.
    const auto n = static_cast<double>(train.rows());
    double widest = 0.0;
    for (std::size_t f = 0; f < d; ++f) {
        double mu = 0.0;
        for (std::size_t r = 0; r < train.rows(); ++r) {
            mu += train.at(r, f);
        }
        mu /= n;
        double var = 0.0;
        for (std::size_t r = 0; r < train.rows(); ++r) {
            const double dev = train.at(r, f) - mu;
            var += dev * dev;
        }
        widest = std::max(widest, var / n);
    }
    m.var_smoothing = widest > 0.0 ? 1e-9 * widest : 1e-9;

    for (int c = 0; c < 2; ++c) {
        m.prior[c] = static_cast<double>(count[c]) / n;
        for (auto& v : m.variance[c]) {
            v = v / static_cast<double>(count[c]) + m.var_smoothing;
        }
    }
    return m;
}

std::array<double, 2> gnb_posterior(const GnbModel& m, std::span<const double> row) {
    std::array<double, 2> log_joint{};
    for (int c = 0; c < 2; ++c) {
        double lj = std::log(m.prior[c]);
        for (std::size_t f = 0; f < row.size(); ++f) {
            const double var = m.variance[c][f];
            const double dev = row[f] - m.mean[c][f];
            lj += -0.5 * std::log(2.0 * std::numbers::pi * var) - dev * dev / (2.0 * var);
        }
        log_joint[c] = lj;
    }
    const double top = std::max(log_joint[0], log_joint[1]);
    const double e0 = std::exp(log_joint[0] - top);
    const double e1 = std::exp(log_joint[1] - top);
    const double z = e0 + e1;
    return {e0 / z, e1 / z};
}

Predictions predict_gnb(const GnbModel& m, const FeatureMatrix& rows) {
    if (rows.cols() != m.feature_count()) {
        throw ShapeError("GaussianNB model expects " + std::to_string(m.feature_count()) +
                         " features, got " + std::to_string(rows.cols()));
    }
    Predictions p;
    p.probability.resize(rows.rows());
    p.labels.resize(rows.rows());
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        const auto post = gnb_posterior(m, rows.row(r));
        p.probability[r] = post[1];
        p.labels[r] = post[1] > post[0] ? 1 : 0;
    }
    return p;
}

} // namespace ddosml
