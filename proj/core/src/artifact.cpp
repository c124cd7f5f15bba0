#include "ddosml/artifact.hpp"

#include <json.hpp>

#include "ddosml/bench.hpp"
#include "ddosml/error.hpp"

namespace ddosml {
namespace {

using nlohmann::json;

json params_json(const GbtParams& p) {
    return {{"n_rounds", p.n_rounds},   {"max_depth", p.max_depth}, {"learning_rate", p.learning_rate},
            {"lambda", p.lambda},       {"gamma", p.gamma},         {"min_child_weight", p.min_child_weight}};
}

json state_json(const GbtModel& m) {
    json trees = json::array();
    for (const auto& t : m.trees) {
        json feature = json::array(), threshold = json::array(), left = json::array(),
             right = json::array(), weight = json::array();
        for (const auto& n : t.nodes) {
            feature.push_back(n.feature);
            threshold.push_back(n.threshold);
            left.push_back(n.left);
            right.push_back(n.right);
            weight.push_back(n.weight);
        }
        trees.push_back({{"feature", feature}, {"threshold", threshold}, {"left", left},
                         {"right", right}, {"weight", weight}});
    }
    return {{"base_logit", m.base_logit}, {"feature_count", m.feature_count}, {"trees", trees}};
}

json model_json(const TrainedModel& model, json& params) {
    return std::visit(
        [&](const auto& m) -> json {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, GbtModel>) {
                params = params_json(m.params);
                return state_json(m);
            } else if constexpr (std::is_same_v<T, KnnModel>) {
                params = {{"k", m.k}};
                return {{"columns", m.points.column_names()},
                        {"rows", m.points.rows()},
                        {"values", m.points.values()},
                        {"labels", m.points.labels()}};
            } else if constexpr (std::is_same_v<T, SgdLinearModel>) {
                params = {{"learning_rate", m.params.learning_rate},
                          {"epochs", m.params.epochs},
                          {"l2", m.params.l2},
                          {"seed", m.params.seed}};
                return {{"weights", m.weights}, {"bias", m.bias}};
            } else {
                params = json::object();
                return {{"prior", m.prior},
                        {"mean", m.mean},
                        {"variance", m.variance},
                        {"var_smoothing", m.var_smoothing}};
            }
        },
        model);
}

GbtModel load_gbt(const json& params, const json& state) {
    GbtModel m;
    m.params.n_rounds = params.at("n_rounds").get<std::size_t>();
    m.params.max_depth = params.at("max_depth").get<std::size_t>();
    m.params.learning_rate = params.at("learning_rate").get<double>();
    m.params.lambda = params.at("lambda").get<double>();
    m.params.gamma = params.at("gamma").get<double>();
    m.params.min_child_weight = params.at("min_child_weight").get<double>();
    m.base_logit = state.at("base_logit").get<double>();
    m.feature_count = state.at("feature_count").get<std::size_t>();
    for (const auto& t : state.at("trees")) {
        auto feature = t.at("feature").get<std::vector<std::int32_t>>();
        auto threshold = t.at("threshold").get<std::vector<double>>();
        auto left = t.at("left").get<std::vector<std::int32_t>>();
        auto right = t.at("right").get<std::vector<std::int32_t>>();
        auto weight = t.at("weight").get<std::vector<double>>();
        const auto n = feature.size();
        if (n == 0 || threshold.size() != n || left.size() != n || right.size() != n || weight.size() != n) {
            throw ParseError("artifact: inconsistent tree arrays");
        }
        RegressionTree tree;
        for (std::size_t i = 0; i < n; ++i) {
            RegressionTree::Node node{feature[i], threshold[i], left[i], right[i], weight[i]};
            if (!node.is_leaf()) {
                const auto in_range = [&](std::int32_t c) {
                    return c > static_cast<std::int32_t>(i) && c < static_cast<std::int32_t>(n);
                };
                if (static_cast<std::size_t>(node.feature) >= m.feature_count || !in_range(node.left) ||
                    !in_range(node.right)) {
                    throw ParseError("artifact: tree node " + std::to_string(i) + " out of range");
                }
            }
            tree.nodes.push_back(node);
        }
        m.trees.push_back(std::move(tree));
    }
    return m;
}

TrainedModel load_model(ModelKind kind, const json& params, const json& state) {
    switch (kind) {
    case ModelKind::gbt: return load_gbt(params, state);
    case ModelKind::knn: {
        const auto rows = state.at("rows").get<std::size_t>();
        FeatureMatrix points(rows, state.at("columns").get<std::vector<std::string>>(),
                             state.at("values").get<std::vector<double>>(),
                             state.at("labels").get<Labels>());
        return fit_knn(points, params.at("k").get<std::size_t>());
    }
    case ModelKind::sgd: {
        SgdLinearModel m;
        m.params.learning_rate = params.at("learning_rate").get<double>();
        m.params.epochs = params.at("epochs").get<std::size_t>();
        m.params.l2 = params.at("l2").get<double>();
        m.params.seed = params.at("seed").get<std::uint64_t>();
        m.weights = state.at("weights").get<std::vector<double>>();
        m.bias = state.at("bias").get<double>();
        return m;
    }
    case ModelKind::gnb: {
        GnbModel m;
        m.prior = state.at("prior").get<std::array<double, 2>>();
        m.mean = state.at("mean").get<std::array<std::vector<double>, 2>>();
        m.variance = state.at("variance").get<std::array<std::vector<double>, 2>>();
        m.var_smoothing = state.at("var_smoothing").get<double>();
        const auto d = m.mean[0].size();
        if (m.mean[1].size() != d || m.variance[0].size() != d || m.variance[1].size() != d) {
            throw ParseError("artifact: inconsistent GaussianNB state");
        }
        return m;
    }
    }
    throw ParseError("artifact: unknown model kind");
}

std::size_t model_width(const TrainedModel& model) {
    return std::visit(
        [](const auto& m) -> std::size_t {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, GbtModel>) {
                return m.feature_count;
            } else if constexpr (std::is_same_v<T, KnnModel>) {
                return m.points.cols();
            } else if constexpr (std::is_same_v<T, SgdLinearModel>) {
                return m.weights.size();
            } else {
                return m.feature_count();
            }
        },
        model);
}

} // namespace

std::string save_artifact(const ModelArtifact& a) {
    json params;
    json state = model_json(a.model, params);
    json doc = {{"format", artifact_format},
                {"version", artifact_version},
                {"kind", short_name(a.kind())},
                {"seed", a.seed},
                {"input_columns", a.input_columns},
                {"feature_mask", {{"kept", a.mask.kept}, {"scores", a.mask.scores}}},
                {"scaler", {{"min", a.scaler.min}, {"max", a.scaler.max}}},
                {"params", params},
                {"state", state}};
    return doc.dump(1) + "\n";
}

ModelArtifact load_artifact(std::string_view text) {
    try {
        const auto doc = json::parse(text);
        if (doc.at("format").get<std::string>() != artifact_format) {
            throw ParseError("artifact: not a ddosml model document");
        }
        if (doc.at("version").get<int>() != artifact_version) {
            throw ParseError("artifact: unsupported version " + doc.at("version").dump());
        }
        const auto kind = model_kind_from_string(doc.at("kind").get<std::string>());
        if (!kind) {
            throw ParseError("artifact: unknown model kind " + doc.at("kind").dump());
        }

        ModelArtifact a;
        a.seed = doc.at("seed").get<std::uint64_t>();
        a.input_columns = doc.at("input_columns").get<std::vector<std::string>>();
        a.mask.kept = doc.at("feature_mask").at("kept").get<std::vector<std::size_t>>();
        a.mask.scores = doc.at("feature_mask").at("scores").get<std::vector<double>>();
        a.scaler.min = doc.at("scaler").at("min").get<std::vector<double>>();
        a.scaler.max = doc.at("scaler").at("max").get<std::vector<double>>();
        a.model = load_model(*kind, doc.at("params"), doc.at("state"));

        if (a.mask.scores.size() != a.input_columns.size() || a.mask.kept.empty() ||
            !std::is_sorted(a.mask.kept.begin(), a.mask.kept.end()) ||
            std::adjacent_find(a.mask.kept.begin(), a.mask.kept.end()) != a.mask.kept.end() ||
            a.mask.kept.back() >= a.input_columns.size()) {
            throw ParseError("artifact: invalid feature mask");
        }
        if (a.scaler.min.size() != a.mask.kept.size() || a.scaler.max.size() != a.mask.kept.size()) {
            throw ParseError("artifact: scaler does not match feature mask");
        }
        if (model_width(a.model) != a.mask.kept.size()) {
            throw ParseError("artifact: model width does not match feature mask");
        }
        return a;
    } catch (const ParseError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("artifact: ") + e.what());
    } catch (const Error& e) {
        throw ParseError(std::string("artifact: ") + e.what());
    }
}

void write_artifact_file(const ModelArtifact& a, const std::filesystem::path& path) {
    write_file_atomic(path, save_artifact(a));
}

ModelArtifact read_artifact_file(const std::filesystem::path& path) {
    return load_artifact(read_file(path));
}

Predictions predict_raw(const ModelArtifact& a, const FeatureMatrix& raw) {
    if (raw.column_names() != a.input_columns) {
        throw ShapeError("input columns do not match the columns the model was trained on");
    }
    return predict(a.model, transform_minmax(a.scaler, apply_mask(a.mask, raw)));
}

} // namespace ddosml
