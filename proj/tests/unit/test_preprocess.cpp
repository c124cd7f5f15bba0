#include <doctest.h>

#include "ddosml/error.hpp"
#include "ddosml/preprocess.hpp"
#include "ddosml/random.hpp"
#include "support/oracles.hpp"

using namespace ddosml;

TEST_CASE("select_features scores") {
    // columns: copy of label, constant, label on 3 of 4 rows
    FeatureMatrix m(4, {"same", "const", "partial"},
                    {0, 5, 0,
                     0, 5, 0,
                     1, 5, 1,
                     1, 5, 0},
                    Labels{0, 0, 1, 1});
    auto mask = select_features(m, 0.05);
    CHECK(mask.scores[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(mask.scores[1] == 0.0);
    const double expected = oracle::pearson_abs({0, 0, 1, 0}, {0, 0, 1, 1});
    CHECK(expected == doctest::Approx(0.5 / std::sqrt(0.75)).epsilon(1e-15));
    CHECK(mask.scores[2] == doctest::Approx(expected).epsilon(1e-12));
    CHECK(mask.kept == std::vector<std::size_t>{0, 2});
}

TEST_CASE("select_features keeps the best column when none passes") {
    FeatureMatrix m(4, {"a", "b"}, {1, 0, 1, 0, 1, 1, 1, 0}, Labels{0, 1, 0, 1});
    auto mask = select_features(m, 0.99);
    REQUIRE(mask.kept.size() == 1);
    CHECK(mask.kept[0] == 1);
}

TEST_CASE("select_features matches the oracle and is scale invariant") {
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 20 + rng.below(60);
        const std::size_t d = 1 + rng.below(6);
        std::vector<double> values(n * d);
        Labels y(n);
        for (std::size_t r = 0; r < n; ++r) {
            y[r] = rng.bernoulli(0.4) ? 1 : 0;
            for (std::size_t c = 0; c < d; ++c) {
                values[r * d + c] = rng.normal() + static_cast<double>(c) * 0.3 * y[r];
            }
        }
        std::vector<std::string> names;
        for (std::size_t c = 0; c < d; ++c) names.push_back("f" + std::to_string(c));
        y[0] = 0;
        y[1] = 1;
        FeatureMatrix m(n, names, values, y);
        auto mask = select_features(m, 0.1);
        for (std::size_t c = 0; c < d; ++c) {
            std::vector<double> col(n);
            for (std::size_t r = 0; r < n; ++r) col[r] = m.at(r, c);
            CHECK(mask.scores[c] == doctest::Approx(oracle::pearson_abs(col, y)).epsilon(1e-9));
            CHECK(mask.scores[c] >= 0.0);
            CHECK(mask.scores[c] <= 1.0);
        }

        std::vector<double> rescaled = values;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                rescaled[r * d + c] = (3.0 + 2.0 * c) * values[r * d + c] - 7.0 * c;
            }
        }
        auto mask2 = select_features(FeatureMatrix(n, names, rescaled, y), 0.1);
        CHECK(mask2.kept == mask.kept);
    }
}

TEST_CASE("fit_minmax") {
    auto p = fit_minmax(FeatureMatrix(3, {"a", "b"}, {2, -1, 10, 4, 6, 0}));
    CHECK(p.min == std::vector<double>{2, -1});
    CHECK(p.max == std::vector<double>{10, 4});
    auto single = fit_minmax(FeatureMatrix(1, {"a"}, {3.5}));
    CHECK(single.min[0] == 3.5);
    CHECK(single.max[0] == 3.5);
    CHECK_THROWS_AS(fit_minmax(FeatureMatrix(0, {"a"}, {})), ArgumentError);
}

TEST_CASE("transform_minmax endpoints, midpoint and degenerate column") {
    ScalerParams p{{2, 5}, {10, 5}};
    auto out = transform_minmax(p, FeatureMatrix(4, {"a", "b"}, {2, 5, 10, 5, 6, 5, 14, 1}));
    CHECK(out.at(0, 0) == 0.0);
    CHECK(out.at(1, 0) == 1.0);
    CHECK(out.at(2, 0) == 0.5);
    CHECK(out.at(3, 0) == 1.5); // no clamping outside the training range
    for (std::size_t r = 0; r < 4; ++r) CHECK(out.at(r, 1) == 0.0);
    CHECK_THROWS_AS(transform_minmax(p, FeatureMatrix(1, {"a"}, {1})), ShapeError);
}

TEST_CASE("transform_minmax keeps training values in [0, 1] and preserves order") {
    Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng.below(40);
        const std::size_t d = 1 + rng.below(5);
        std::vector<double> scale(d);
        for (auto& s : scale) s = std::pow(10.0, rng.normal() * 3);
        std::vector<double> v(n * d);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = rng.normal(0.0, scale[i % d]);
        std::vector<std::string> names;
        for (std::size_t c = 0; c < d; ++c) names.push_back("c" + std::to_string(c));
        FeatureMatrix train(n, names, v);
        auto p = fit_minmax(train);
        auto t = transform_minmax(p, train);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                CHECK(t.at(r, c) >= 0.0);
                CHECK(t.at(r, c) <= 1.0);
                for (std::size_t r2 = 0; r2 < n; ++r2) {
                    if (train.at(r, c) < train.at(r2, c)) CHECK(t.at(r, c) < t.at(r2, c));
                }
            }
        }
    }
}
