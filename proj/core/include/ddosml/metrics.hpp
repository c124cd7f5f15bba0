#pragma once

#include <cstddef>
#include <span>

namespace ddosml {

// Positive class is ddos (1).
struct ConfusionMatrix {
    std::size_t tp = 0;
    std::size_t tn = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;

    std::size_t total() const noexcept { return tp + tn + fp + fn; }
    bool operator==(const ConfusionMatrix&) const = default;
};

struct MetricReport {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;

    bool operator==(const MetricReport&) const = default;
};

// Throws ArgumentError on length mismatch, empty input, or a non-binary entry.
ConfusionMatrix confusion(std::span<const int> truth, std::span<const int> pred);

// Any 0/0 ratio is reported as 0. Throws ArgumentError on an empty matrix.
MetricReport report(const ConfusionMatrix& cm);

} // namespace ddosml
