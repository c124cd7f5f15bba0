#pragma once

#include <vector>

#include "ddosml/feature_matrix.hpp"

namespace ddosml {

// Per-row probability of class 1 (ddos) and the hard label.
struct Predictions {
    std::vector<double> probability;
    Labels labels;
};

// Shared 0.5 decision rule: label 1 iff probability >= 0.5.
inline Labels threshold_labels(const std::vector<double>& probability) {
    Labels out(probability.size());
    for (std::size_t i = 0; i < probability.size(); ++i) {
        out[i] = probability[i] >= 0.5 ? 1 : 0;
    }
    return out;
}

} // namespace ddosml
