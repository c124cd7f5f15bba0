#include <doctest.h>

#include <algorithm>

#include "ddosml/error.hpp"
#include "ddosml/synth.hpp"

using namespace ddosml;

namespace {

std::size_t ddos_rows(const Dataset& ds) {
    return static_cast<std::size_t>(std::count_if(ds.records.begin(), ds.records.end(),
                                                  [](const FlowRecord& r) { return r.label == FlowLabel::ddos; }));
}

} // namespace

TEST_CASE("gen_blobs label count and determinism") {
    SynthConfig cfg{100, 0.5, 3, 0.5};
    auto ds = gen_blobs(cfg);
    CHECK(ds.records.size() == 100);
    CHECK(ddos_rows(ds) == 50);
    CHECK(write_flow_csv(gen_blobs(cfg)) == write_flow_csv(ds));
    cfg.seed = 4;
    CHECK(write_flow_csv(gen_blobs(cfg)) != write_flow_csv(ds));
}

TEST_CASE("gen_blobs without noise sits on the centers") {
    auto ds = gen_blobs({40, 0.25, 9, 0.0});
    for (const auto& r : ds.records) {
        if (r.label == FlowLabel::ddos) {
            CHECK(r.pkt_rate == 5000.0);
            CHECK(r.pkt_size_mean == 100.0);
            CHECK(r.duration == 2.0);
        } else {
            CHECK(r.pkt_rate == 50.0);
        }
    }
}

TEST_CASE("gen_xor labels follow the sign pattern") {
    auto m = gen_xor({400, 0.5, 1, 0.0});
    REQUIRE(m.rows() == 400);
    REQUIRE(m.cols() == 2);
    std::size_t ones = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const bool differ = (m.at(r, 0) > 0) != (m.at(r, 1) > 0);
        CHECK(m.labels()[r] == (differ ? 1 : 0));
        ones += static_cast<std::size_t>(m.labels()[r]);
    }
    CHECK(ones == 200);
    // Round-robin: row 1 is (+1, -1), row 0 is (+1, +1).
    CHECK(m.at(1, 0) == 1.0);
    CHECK(m.at(1, 1) == -1.0);
    CHECK(m.labels()[1] == 1);
    CHECK(m.labels()[0] == 0);
}

TEST_CASE("gen_iot_mix label count and seeds") {
    auto a = gen_iot_mix({1000, 0.3, 7, 1.0});
    CHECK(ddos_rows(a) == 300);
    auto b = gen_iot_mix({1000, 0.3, 8, 1.0});
    CHECK_FALSE(a.records == b.records);
}

TEST_CASE("gen_iot_mix classes overlap on pkt_rate") {
    for (std::uint64_t seed : {1u, 7u, 12345u}) {
        auto ds = gen_iot_mix({1000, 0.3, seed, 1.0});
        std::vector<double> ddos_rates;
        for (const auto& r : ds.records) {
            if (r.label == FlowLabel::ddos) ddos_rates.push_back(r.pkt_rate);
        }
        std::sort(ddos_rates.begin(), ddos_rates.end());
        const double p10 = ddos_rates[ddos_rates.size() / 10];
        const double p90 = ddos_rates[ddos_rates.size() * 9 / 10];
        const auto inside = std::count_if(ds.records.begin(), ds.records.end(), [&](const FlowRecord& r) {
            return r.label == FlowLabel::benign && r.pkt_rate >= p10 && r.pkt_rate <= p90;
        });
        CHECK(inside >= 1);
    }
}

TEST_CASE("generated flows survive cleaning untouched") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        for (double noise : {0.0, 0.5, 1.0, 3.0}) {
            SynthConfig cfg{257, 0.37, seed, noise};
            for (const auto& ds : {gen_blobs(cfg), gen_iot_mix(cfg)}) {
                auto [out, stats] = clean(ds);
                CHECK(stats.rows_dropped_missing + stats.rows_dropped_range == 0);
                CHECK(ddos_rows(out) == attack_count(cfg));
            }
        }
    }
}

TEST_CASE("synth config validation") {
    CHECK_THROWS_AS(gen_blobs({3, 0.5, 0, 0.5}), ArgumentError);
    CHECK_THROWS_AS(gen_iot_mix({100, 0.0, 0, 0.5}), ArgumentError);
    CHECK_THROWS_AS(gen_xor({100, 1.0, 0, 0.5}), ArgumentError);
    CHECK_THROWS_AS(gen_blobs({100, 0.5, 0, -1.0}), ArgumentError);
}
