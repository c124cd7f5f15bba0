#include "ddosml/synth.hpp"

#include <algorithm>
#include <cmath>

#include "ddosml/error.hpp"
#include "ddosml/random.hpp"

namespace ddosml {
namespace {

struct Centers {
    double pkt_size_mean;
    double pkt_rate;
    double duration;
};

constexpr Centers benign_center{512.0, 50.0, 30.0};
constexpr Centers ddos_center{100.0, 5000.0, 2.0};

// Shuffled label vector with exactly attack_count(cfg) ones.
std::vector<FlowLabel> draw_labels(const SynthConfig& cfg, Rng& rng) {
    std::vector<FlowLabel> labels(cfg.n_rows, FlowLabel::benign);
    std::fill_n(labels.begin(), attack_count(cfg), FlowLabel::ddos);
    rng.shuffle(std::span<FlowLabel>(labels));
    return labels;
}

Protocol draw_protocol(FlowLabel label, double majority, Rng& rng) {
    const bool majority_pick = rng.bernoulli(majority);
    if (label == FlowLabel::benign) {
        return majority_pick ? Protocol::tcp : Protocol::udp;
    }
    return majority_pick ? Protocol::udp : Protocol::tcp;
}

double nonneg_normal(Rng& rng, double center, double sigma) {
    return std::max(0.0, rng.normal(center, sigma));
}

} // namespace

void validate(const SynthConfig& cfg) {
    if (cfg.n_rows < 4) {
        throw ArgumentError("synth: n_rows must be at least 4");
    }
    if (!(cfg.attack_fraction > 0.0 && cfg.attack_fraction < 1.0)) {
        throw ArgumentError("synth: attack_fraction must lie in (0, 1)");
    }
    if (!(cfg.noise_sigma >= 0.0) || !std::isfinite(cfg.noise_sigma)) {
        throw ArgumentError("synth: noise_sigma must be a finite non-negative number");
    }
}

std::size_t attack_count(const SynthConfig& cfg) {
    return static_cast<std::size_t>(std::llround(static_cast<double>(cfg.n_rows) * cfg.attack_fraction));
}

Dataset gen_blobs(const SynthConfig& cfg) {
    validate(cfg);
    Rng rng(cfg.seed);
    auto labels = draw_labels(cfg, rng);

    Dataset ds;
    ds.source_name = "synth:blobs";
    ds.records.reserve(cfg.n_rows);
    for (auto label : labels) {
        const auto& c = label == FlowLabel::ddos ? ddos_center : benign_center;
        const double scale = cfg.noise_sigma * 0.1;
        FlowRecord r;
        r.pkt_size_mean = nonneg_normal(rng, c.pkt_size_mean, scale * c.pkt_size_mean);
        r.pkt_rate = nonneg_normal(rng, c.pkt_rate, scale * c.pkt_rate);
        r.duration = nonneg_normal(rng, c.duration, scale * c.duration);
        r.protocol = draw_protocol(label, 0.8, rng);
        r.label = label;
        ds.records.push_back(r);
    }
    return ds;
}

FeatureMatrix gen_xor(const SynthConfig& cfg) {
    validate(cfg);
    Rng rng(cfg.seed);
    // (+,+) (+,-) (-,+) (-,-)
    constexpr double signs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};

    std::vector<double> values;
    values.reserve(cfg.n_rows * 2);
    Labels labels;
    labels.reserve(cfg.n_rows);
    for (std::size_t i = 0; i < cfg.n_rows; ++i) {
        const auto& q = signs[i % 4];
        values.push_back(q[0] + cfg.noise_sigma * rng.normal());
        values.push_back(q[1] + cfg.noise_sigma * rng.normal());
        labels.push_back(q[0] != q[1] ? 1 : 0);
    }
    return {cfg.n_rows, {"x1", "x2"}, std::move(values), std::move(labels)};
}

Dataset gen_iot_mix(const SynthConfig& cfg) {
    validate(cfg);
    Rng rng(cfg.seed);
    auto labels = draw_labels(cfg, rng);

    // Traffic modes. Benign: telemetry (small packets, long sessions) or bulk
    // transfer (large packets, short sessions). DDoS: floods (small packets,
    // short bursts) or reflection/amplification (large packets, sustained).
    constexpr double small_pkt = 150.0;
    constexpr double large_pkt = 900.0;
    constexpr double short_dur = 3.0;
    constexpr double long_dur = 30.0;
    const double size_spread = 0.6 * cfg.noise_sigma;     // log-scale
    const double duration_spread = 0.75 * cfg.noise_sigma; // log-scale

    Dataset ds;
    ds.source_name = "synth:iotmix";
    ds.records.reserve(cfg.n_rows);
    for (auto label : labels) {
        const bool ddos = label == FlowLabel::ddos;
        const bool small_packets = rng.bernoulli(ddos ? 0.7 : 0.5);
        const bool long_session = ddos ? !small_packets : small_packets;

        FlowRecord r;
        r.pkt_rate = nonneg_normal(rng, ddos ? iot_mix::ddos_rate : iot_mix::benign_rate,
                                   iot_mix::rate_sigma * cfg.noise_sigma);
        r.pkt_size_mean = (small_packets ? small_pkt : large_pkt) * std::exp(size_spread * rng.normal());
        r.duration = (long_session ? long_dur : short_dur) * std::exp(duration_spread * rng.normal());
        r.protocol = draw_protocol(label, 0.7, rng);
        r.label = label;
        ds.records.push_back(r);
    }
    return ds;
}

} // namespace ddosml
