#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ddosml/flowdata.hpp"
#include "ddosml/metrics.hpp"
#include "ddosml/model.hpp"
#include "ddosml/synth.hpp"

namespace ddosml {

enum class SynthKind { blobs, xor_, iotmix };

std::string_view to_string(SynthKind k) noexcept;
std::optional<SynthKind> synth_kind_from_string(std::string_view name) noexcept;

// Default noise when the caller leaves it unset: blobs 0.5, xor 0.1, iotmix 1.0.
double default_noise(SynthKind k) noexcept;

struct SynthSpec {
    SynthKind kind = SynthKind::iotmix;
    std::size_t rows = 1000;
    double attack_fraction = 0.5;
    std::optional<double> noise;

    bool operator==(const SynthSpec&) const = default;
};

// Exactly one of `input` and `synth` must be set.
struct DataSource {
    std::optional<std::filesystem::path> input;
    std::optional<SynthSpec> synth;

    bool operator==(const DataSource&) const = default;
};

struct LoadedData {
    FeatureMatrix matrix;               // labeled, unscaled
    std::optional<CleanStats> clean;    // absent for matrix generators
    std::string source_name;
};

// Reads/generates, cleans and encodes. `seed` drives synthetic generation.
// Throws IoError, ParseError or EmptyDatasetError.
LoadedData load_data(const DataSource& src, std::uint64_t seed);

// The generator output for a synth spec, serialized as CSV (flow schema for
// blobs/iotmix, `x1,x2,label` for xor).
std::string generate_csv(const SynthSpec& spec, std::uint64_t seed);

struct BenchConfig {
    DataSource source;
    double train_fraction = 0.8;
    std::uint64_t seed = 42;
    double threshold = 0.05;
    ModelParams models;
    std::filesystem::path out_dir;

    bool operator==(const BenchConfig&) const = default;
};

// Throws ConfigError describing the first invalid field.
void validate(const BenchConfig& cfg);

// Canonical text rendering of every config field; the digest hashes it.
std::string canonical_config(const BenchConfig& cfg);
// 16 lowercase hex digits (FNV-1a 64 of canonical_config).
std::string config_digest(const BenchConfig& cfg);

struct ModelResult {
    ModelKind kind = ModelKind::gbt;
    ConfusionMatrix confusion;
    MetricReport metrics;
    double fit_seconds = 0.0;     // wall clock, informational
    double predict_seconds = 0.0; // wall clock, informational
};

struct BenchReport {
    std::vector<ModelResult> models; // GBT, KNN, SGD-Linear, GaussianNB
    std::uint64_t seed = 0;
    std::string config_digest;
    std::string source_name;
    std::optional<CleanStats> clean;
    std::size_t rows_total = 0;
    std::size_t rows_train = 0;
    std::size_t rows_test = 0;
    std::vector<std::string> kept_features;

    const ModelResult& result(ModelKind k) const;
};

// clean -> encode -> stratified split -> feature selection and min-max scaling
// fitted on the train split -> four concurrent fits -> test-split evaluation.
// Throws StratificationError when a class is too small to split.
BenchReport run_benchmark(const BenchConfig& cfg);

// Model | Accuracy | Precision | Recall | F1 Score, percentages with 2 decimals.
std::string emit_table(const BenchReport& r);
// `model,metric,value`, 16 data rows, fractions with 6 decimals.
std::string emit_heatmap_csv(const BenchReport& r);
std::string emit_report_json(const BenchReport& r);

// Writes report.txt, heatmap.csv and report.json into `dir`, each via a
// temporary file and rename.
void write_report_files(const BenchReport& r, const std::filesystem::path& dir);

// Write-then-rename helper shared with the CLI.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);
std::string read_file(const std::filesystem::path& path);

} // namespace ddosml
