#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ddosml/model.hpp"
#include "ddosml/preprocess.hpp"

namespace ddosml {

// Everything needed to score raw rows: the column layout the model was trained
// against, the feature mask and scaler fitted on the training split, the
// fitted model itself and the seed of the run that produced it.
struct ModelArtifact {
    std::vector<std::string> input_columns;
    FeatureMask mask;
    ScalerParams scaler;
    TrainedModel model;
    std::uint64_t seed = 0;

    ModelKind kind() const noexcept { return kind_of(model); }
};

inline constexpr std::string_view artifact_format = "ddosml-model";
inline constexpr int artifact_version = 1;

// JSON document. Doubles are written in shortest round-trip form, so
// load(save(a)) reproduces every prediction bit for bit.
std::string save_artifact(const ModelArtifact& a);
// Throws ParseError on malformed or unsupported documents.
ModelArtifact load_artifact(std::string_view text);

void write_artifact_file(const ModelArtifact& a, const std::filesystem::path& path);
ModelArtifact read_artifact_file(const std::filesystem::path& path);

// Applies mask and scaler to a raw matrix and predicts. Throws ShapeError when
// the column names differ from input_columns.
Predictions predict_raw(const ModelArtifact& a, const FeatureMatrix& raw);

} // namespace ddosml
