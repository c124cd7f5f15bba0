#include <doctest.h>

#include "ddosml/error.hpp"
#include "ddosml/knn.hpp"
#include "ddosml/random.hpp"
#include "support/oracles.hpp"

using namespace ddosml;

namespace {

struct RandomPoints {
    FeatureMatrix matrix;
    std::vector<std::vector<double>> rows;
};

RandomPoints random_points(Rng& rng, std::size_t n, std::size_t d, bool labeled) {
    RandomPoints out;
    std::vector<double> flat;
    Labels y;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> row(d);
        // Integer grid: exact distance ties are common.
        for (auto& v : row) v = static_cast<double>(rng.below(6));
        flat.insert(flat.end(), row.begin(), row.end());
        out.rows.push_back(row);
        y.push_back(rng.bernoulli(0.5) ? 1 : 0);
    }
    std::vector<std::string> names;
    for (std::size_t c = 0; c < d; ++c) names.push_back("f" + std::to_string(c));
    out.matrix = labeled ? FeatureMatrix(n, names, flat, y) : FeatureMatrix(n, names, flat);
    return out;
}

} // namespace

TEST_CASE("fit_knn bounds") {
    FeatureMatrix x(3, {"a"}, {0, 1, 2}, Labels{0, 1, 1});
    CHECK_NOTHROW(fit_knn(x, 3));
    CHECK_THROWS_AS(fit_knn(x, 0), FitError);
    CHECK_THROWS_AS(fit_knn(x, 4), FitError);
    CHECK(fit_knn(x, 1).points == x);
}

TEST_CASE("euclidean distance") {
    const std::vector<double> a{0, 0}, b{3, 4};
    CHECK(euclidean_distance(a, b) == 5.0);
}

TEST_CASE("k = 1 on a training point returns its label") {
    FeatureMatrix x(3, {"a", "b"}, {0, 0, 3, 4, 10, 10}, Labels{0, 1, 0});
    auto m = fit_knn(x, 1);
    auto p = predict_knn(m, FeatureMatrix(1, {"a", "b"}, {3, 4}));
    CHECK(p.labels[0] == 1);
    CHECK(p.probability[0] == 1.0);
}

TEST_CASE("k = 3 with neighbours (1, 1, 0)") {
    FeatureMatrix x(5, {"a"}, {0, 1, 2, 10, 11}, Labels{1, 1, 0, 0, 0});
    auto p = predict_knn(fit_knn(x, 3), FeatureMatrix(1, {"a"}, {0.5}));
    const auto o = oracle::knn_scan({{0}, {1}, {2}, {10}, {11}}, {1, 1, 0, 0, 0}, {0.5}, 3);
    CHECK(o.label == 1);
    CHECK(o.probability == doctest::Approx(2.0 / 3.0));
    CHECK(p.labels[0] == 1);
    CHECK(p.probability[0] == 2.0 / 3.0);
}

TEST_CASE("vote ties go to the closer class, then class 0") {
    // k = 2: one neighbour of each class.
    FeatureMatrix x(2, {"a"}, {0, 3}, Labels{0, 1});
    auto m = fit_knn(x, 2);
    auto p = predict_knn(m, FeatureMatrix(3, {"a"}, {2, 1, 1.5}));
    CHECK(p.labels == Labels{1, 0, 0});
    CHECK(p.probability[0] == 0.5);
}

TEST_CASE("ranking ties go to the lower training index") {
    // Both training points sit at distance 1 from the query.
    FeatureMatrix x(2, {"a"}, {-1, 1}, Labels{1, 0});
    auto p = predict_knn(fit_knn(x, 1), FeatureMatrix(1, {"a"}, {0}));
    CHECK(p.labels[0] == 1);
}

TEST_CASE("predict_knn agrees with the exhaustive-scan oracle") {
    Rng rng(2024);
    auto train = random_points(rng, 200, 3, true);
    auto test = random_points(rng, 100, 3, false);
    for (std::size_t k : {1u, 3u, 5u}) {
        auto p = predict_knn(fit_knn(train.matrix, k), test.matrix);
        for (std::size_t q = 0; q < test.rows.size(); ++q) {
            const auto o = oracle::knn_scan(train.rows, train.matrix.labels(), test.rows[q], k);
            CHECK(p.labels[q] == o.label);
            CHECK(p.probability[q] == o.probability);
        }
    }
}

TEST_CASE("predict_knn width mismatch") {
    auto m = fit_knn(FeatureMatrix(2, {"a"}, {0, 1}, Labels{0, 1}), 1);
    CHECK_THROWS_AS(predict_knn(m, FeatureMatrix(1, {"a", "b"}, {0, 0})), ShapeError);
}
