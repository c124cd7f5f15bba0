#include "ddosml/model.hpp"

#include <type_traits>

namespace ddosml {

std::string_view display_name(ModelKind k) noexcept {
    switch (k) {
    case ModelKind::gbt: return "GBT";
    case ModelKind::knn: return "KNN";
    case ModelKind::sgd: return "SGD-Linear";
    case ModelKind::gnb: return "GaussianNB";
    }
    return "?";
}

std::string_view short_name(ModelKind k) noexcept {
    switch (k) {
    case ModelKind::gbt: return "gbt";
    case ModelKind::knn: return "knn";
    case ModelKind::sgd: return "sgd";
    case ModelKind::gnb: return "gnb";
    }
    return "?";
}

std::optional<ModelKind> model_kind_from_string(std::string_view name) noexcept {
    for (auto k : all_model_kinds) {
        if (name == short_name(k) || name == display_name(k)) {
            return k;
        }
    }
    return std::nullopt;
}

ModelKind kind_of(const TrainedModel& m) noexcept {
    return static_cast<ModelKind>(m.index());
}

TrainedModel fit(ModelKind kind, const FeatureMatrix& train, const ModelParams& params) {
    switch (kind) {
    case ModelKind::gbt: return fit_gbt(train, params.gbt);
    case ModelKind::knn: return fit_knn(train, params.knn_k);
    case ModelKind::sgd: return fit_sgd(train, params.sgd);
    case ModelKind::gnb: return fit_gnb(train);
    }
    return fit_gnb(train);
}

Predictions predict(const TrainedModel& m, const FeatureMatrix& rows) {
    return std::visit(
        [&](const auto& model) -> Predictions {
            using T = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<T, GbtModel>) {
                return predict_gbt(model, rows);
            } else if constexpr (std::is_same_v<T, KnnModel>) {
                return predict_knn(model, rows);
            } else if constexpr (std::is_same_v<T, SgdLinearModel>) {
                return predict_sgd(model, rows);
            } else {
                return predict_gnb(model, rows);
            }
        },
        m);
}

} // namespace ddosml
