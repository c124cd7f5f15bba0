#pragma once

#include <cstddef>
#include <cstdint>

#include "ddosml/feature_matrix.hpp"
#include "ddosml/flowdata.hpp"

namespace ddosml {

struct SynthConfig {
    std::size_t n_rows = 1000;
    double attack_fraction = 0.5;
    std::uint64_t seed = 0;
    double noise_sigma = 0.5;
};

// Throws ArgumentError unless n_rows >= 4, 0 < attack_fraction < 1 and
// noise_sigma >= 0.
void validate(const SynthConfig& cfg);

// Number of ddos rows every flow generator emits: round(n_rows * attack_fraction).
std::size_t attack_count(const SynthConfig& cfg);

// Two well-separated volumetric clusters. Per-feature noise is
// noise_sigma * 0.1 * center; values are clamped at zero.
Dataset gen_blobs(const SynthConfig& cfg);

// Two features at (+-1, +-1) with N(0, noise_sigma) noise; label is the XOR of
// the pre-noise signs. Quadrants are assigned round-robin, so labels are
// balanced regardless of attack_fraction.
FeatureMatrix gen_xor(const SynthConfig& cfg);

// Overlapping classes. pkt_rate centers sit two standard deviations apart at
// noise_sigma = 1. Packet size and duration follow two traffic modes per class
// whose class signal lives mostly in their interaction, which a per-feature
// independent model cannot represent.
Dataset gen_iot_mix(const SynthConfig& cfg);

namespace iot_mix {
inline constexpr double benign_rate = 1000.0;
inline constexpr double ddos_rate = 2000.0;
inline constexpr double rate_sigma = 500.0; // multiplied by noise_sigma
} // namespace iot_mix

} // namespace ddosml
