#pragma once

#include <cmath>

namespace ddosml::logistic {

inline double sigmoid(double z) noexcept {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

// Binary cross-entropy of a logit against a 0/1 target, computed without
// overflow: log(1 + e^z) - y*z.
inline double loss(double logit, int y) noexcept {
    const double softplus = logit > 0.0 ? logit + std::log1p(std::exp(-logit))
                                        : std::log1p(std::exp(logit));
    return softplus - static_cast<double>(y) * logit;
}

// First and second derivative of loss() with respect to the logit.
inline double gradient(double logit, int y) noexcept { return sigmoid(logit) - static_cast<double>(y); }
inline double hessian(double logit) noexcept {
    const double p = sigmoid(logit);
    return p * (1.0 - p);
}

} // namespace ddosml::logistic
