#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ddosml/feature_matrix.hpp"

namespace ddosml {

enum class Protocol : std::uint8_t { tcp, udp, icmp, other };
enum class FlowLabel : std::uint8_t { benign = 0, ddos = 1 };

// Unlisted names map to Protocol::other. Case-insensitive.
Protocol protocol_from_string(std::string_view name) noexcept;
std::string_view to_string(Protocol p) noexcept;
std::string_view to_string(FlowLabel l) noexcept;

// One aggregated network flow. A numeric field that failed to parse holds NaN
// until clean() removes the record.
struct FlowRecord {
    double pkt_size_mean = 0.0;
    double pkt_rate = 0.0;
    double duration = 0.0;
    Protocol protocol = Protocol::other;
    FlowLabel label = FlowLabel::benign;

    bool operator==(const FlowRecord&) const = default;
};

struct Dataset {
    std::vector<FlowRecord> records;
    std::string source_name;
};

struct CleanStats {
    std::size_t rows_in = 0;
    std::size_t rows_dropped_missing = 0;
    std::size_t rows_dropped_range = 0;
    std::size_t rows_out = 0;

    bool operator==(const CleanStats&) const = default;
};

inline constexpr std::string_view flow_csv_header = "pkt_size_mean,pkt_rate,duration,protocol,label";

// Column names produced by to_matrix, in order.
const std::vector<std::string>& flow_feature_names();

// Parses the fixed five-column flow schema. Throws ParseError on a wrong
// header, a wrong column count, or an unknown label.
Dataset parse_flow_csv(std::string_view text, std::string source_name = {});

// Serializes with shortest round-trip number formatting; `\n` line endings.
std::string write_flow_csv(const Dataset& ds);

// Drops records with missing/non-finite or negative numeric fields. Throws
// EmptyDatasetError when nothing survives.
std::pair<Dataset, CleanStats> clean(const Dataset& ds);

// Three numeric columns followed by a one-hot protocol block
// (proto_TCP, proto_UDP, proto_ICMP, proto_OTHER); labels carried over.
FeatureMatrix to_matrix(const Dataset& ds);

// Seeded per-class shuffle then per-class cut at round(train_fraction * count),
// clamped so each class keeps at least one row on both sides. Rows keep their
// original relative order within each part.
std::pair<FeatureMatrix, FeatureMatrix> stratified_split(const FeatureMatrix& m,
                                                         double train_fraction,
                                                         std::uint64_t seed);

// Row indices behind stratified_split, exposed for tests and diagnostics.
struct SplitIndices {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};
SplitIndices stratified_split_indices(std::span<const int> labels, double train_fraction,
                                      std::uint64_t seed);

// Writes a labeled matrix as `<col>,...,label` CSV. Used for generators whose
// output is not a flow dataset.
std::string write_matrix_csv(const FeatureMatrix& m);

} // namespace ddosml
