#include "ddosml/knn.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <utility>

#include "ddosml/error.hpp"

namespace ddosml {
namespace {

// Runs body(i) for i in [0, n) across hardware threads. Each index writes only
// its own output slot, so results do not depend on scheduling.
template <typename Body>
void parallel_for(std::size_t n, std::size_t min_chunk, Body body) {
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min(hw, std::max<std::size_t>(1, n / min_chunk));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([=, &body] {
            for (std::size_t i = w; i < n; i += workers) {
                body(i);
            }
        });
    }
}

} // namespace

KnnModel fit_knn(const FeatureMatrix& train, std::size_t k) {
    if (k < 1 || k > train.rows()) {
        throw FitError("KNN: k = " + std::to_string(k) + " outside [1, " + std::to_string(train.rows()) + "]");
    }
    require_binary(train.labels());
    return {k, train};
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

Predictions predict_knn(const KnnModel& m, const FeatureMatrix& rows) {
    if (rows.cols() != m.points.cols()) {
        throw ShapeError("KNN model expects " + std::to_string(m.points.cols()) + " features, got " +
                         std::to_string(rows.cols()));
    }
    const auto& train_labels = m.points.labels();
    const std::size_t n_points = m.points.rows();
    const std::size_t k = m.k;

    Predictions out;
    out.probability.resize(rows.rows());
    out.labels.resize(rows.rows());
    parallel_for(rows.rows(), 64, [&](std::size_t q) {
        auto query = rows.row(q);
        std::vector<std::pair<double, std::size_t>> ranked(n_points);
        for (std::size_t i = 0; i < n_points; ++i) {
            ranked[i] = {euclidean_distance(query, m.points.row(i)), i};
        }
        // (distance, index) is a strict total order: ties go to the lower index.
        std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(k), ranked.end());

        std::size_t votes[2] = {0, 0};
        double summed[2] = {0.0, 0.0};
        for (std::size_t j = 0; j < k; ++j) {
            const int c = train_labels[ranked[j].second];
            ++votes[c];
            summed[c] += ranked[j].first;
        }
        int label;
        if (votes[1] != votes[0]) {
            label = votes[1] > votes[0] ? 1 : 0;
        } else {
            label = summed[1] < summed[0] ? 1 : 0;
        }
        out.labels[q] = label;
        out.probability[q] = static_cast<double>(votes[1]) / static_cast<double>(k);
    });
    return out;
}

} // namespace ddosml
