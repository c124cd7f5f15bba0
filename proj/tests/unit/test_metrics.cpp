#include <doctest.h>

#include "ddosml/error.hpp"
#include "ddosml/feature_matrix.hpp"
#include "ddosml/metrics.hpp"
#include "ddosml/random.hpp"
#include "support/oracles.hpp"

using namespace ddosml;

TEST_CASE("confusion enumerations") {
    CHECK(confusion(Labels{1, 0}, Labels{1, 0}) == ConfusionMatrix{1, 1, 0, 0});
    CHECK(confusion(Labels{1, 1, 0, 0}, Labels{1, 0, 1, 0}) == ConfusionMatrix{1, 1, 1, 1});
    CHECK(confusion(Labels(5, 1), Labels(5, 0)) == ConfusionMatrix{0, 0, 0, 5});
}

TEST_CASE("confusion argument errors") {
    CHECK_THROWS_AS(confusion(Labels{1, 0}, Labels{1}), ArgumentError);
    CHECK_THROWS_AS(confusion(Labels{}, Labels{}), ArgumentError);
    CHECK_THROWS_AS(confusion(Labels{2}, Labels{1}), ArgumentError);
    CHECK_THROWS_AS(confusion(Labels{1}, Labels{-1}), ArgumentError);
    CHECK_THROWS_AS(report(ConfusionMatrix{}), ArgumentError);
}

TEST_CASE("report on the 50/40/5/5 matrix") {
    auto r = report({50, 40, 5, 5});
    CHECK(r.accuracy == doctest::Approx(0.90).epsilon(1e-12));
    CHECK(r.precision == doctest::Approx(50.0 / 55.0).epsilon(1e-12));
    CHECK(r.recall == doctest::Approx(50.0 / 55.0).epsilon(1e-12));
    CHECK(r.f1 == doctest::Approx(0.9091).epsilon(1e-4));
}

TEST_CASE("report identity and zero-division cases") {
    CHECK(report({3, 4, 0, 0}) == MetricReport{1.0, 1.0, 1.0, 1.0});
    auto r = report({0, 5, 0, 2});
    CHECK(r.precision == 0.0);
    CHECK(r.recall == 0.0);
    CHECK(r.f1 == 0.0);
    CHECK(r.accuracy == doctest::Approx(5.0 / 7.0));
}

TEST_CASE("metrics agree with a per-row recount and stay in range") {
    Rng rng(404);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng.below(1000);
        Labels t(n), p(n);
        const double bias = rng.uniform();
        for (std::size_t i = 0; i < n; ++i) {
            t[i] = rng.bernoulli(bias) ? 1 : 0;
            p[i] = rng.bernoulli(0.8) ? t[i] : 1 - t[i];
        }
        const auto cm = confusion(t, p);
        const auto o = oracle::recount(t, p);
        CHECK(cm == ConfusionMatrix{o.tp, o.tn, o.fp, o.fn});
        CHECK(cm.total() == n);

        const auto r = report(cm);
        const double precision = oracle::safe_div(double(o.tp), double(o.tp + o.fp));
        const double recall = oracle::safe_div(double(o.tp), double(o.tp + o.fn));
        CHECK(r.accuracy == double(o.tp + o.tn) / double(n));
        CHECK(r.precision == precision);
        CHECK(r.recall == recall);
        CHECK(r.f1 == oracle::safe_div(2 * precision * recall, precision + recall));
        for (double v : {r.accuracy, r.precision, r.recall, r.f1}) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }

        // fp <-> fn swap keeps accuracy and exchanges precision and recall.
        const auto swapped = report({cm.tp, cm.tn, cm.fn, cm.fp});
        CHECK(swapped.accuracy == r.accuracy);
        CHECK(swapped.precision == r.recall);
        CHECK(swapped.recall == r.precision);
    }
}
