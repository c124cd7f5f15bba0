#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <variant>

#include "ddosml/gbt.hpp"
#include "ddosml/gnb.hpp"
#include "ddosml/knn.hpp"
#include "ddosml/sgd.hpp"

namespace ddosml {

enum class ModelKind { gbt, knn, sgd, gnb };

inline constexpr std::array<ModelKind, 4> all_model_kinds = {ModelKind::gbt, ModelKind::knn,
                                                             ModelKind::sgd, ModelKind::gnb};

// Report name: GBT, KNN, SGD-Linear, GaussianNB.
std::string_view display_name(ModelKind k) noexcept;
// Short identifier used on the command line and in artifacts: gbt, knn, sgd, gnb.
std::string_view short_name(ModelKind k) noexcept;
std::optional<ModelKind> model_kind_from_string(std::string_view name) noexcept;

struct ModelParams {
    GbtParams gbt;
    std::size_t knn_k = default_knn_k;
    SgdParams sgd;

    bool operator==(const ModelParams&) const = default;
};

using TrainedModel = std::variant<GbtModel, KnnModel, SgdLinearModel, GnbModel>;

ModelKind kind_of(const TrainedModel& m) noexcept;

TrainedModel fit(ModelKind kind, const FeatureMatrix& train, const ModelParams& params);
Predictions predict(const TrainedModel& m, const FeatureMatrix& rows);

} // namespace ddosml
