#include "ddosml/bench.hpp"

#include <chrono>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "ddosml/error.hpp"
#include "ddosml/preprocess.hpp"

namespace ddosml {
namespace {

std::string number(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, ptr};
}

std::string percent(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f%%", v * 100.0);
    return buf;
}

std::string fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

SynthConfig synth_config(const SynthSpec& spec, std::uint64_t seed) {
    return {spec.rows, spec.attack_fraction, seed, spec.noise.value_or(default_noise(spec.kind))};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

std::string_view to_string(SynthKind k) noexcept {
    switch (k) {
    case SynthKind::blobs: return "blobs";
    case SynthKind::xor_: return "xor";
    case SynthKind::iotmix: return "iotmix";
    }
    return "?";
}

std::optional<SynthKind> synth_kind_from_string(std::string_view name) noexcept {
    for (auto k : {SynthKind::blobs, SynthKind::xor_, SynthKind::iotmix}) {
        if (name == to_string(k)) {
            return k;
        }
    }
    return std::nullopt;
}

double default_noise(SynthKind k) noexcept {
    switch (k) {
    case SynthKind::blobs: return 0.5;
    case SynthKind::xor_: return 0.1;
    case SynthKind::iotmix: return 1.0;
    }
    return 0.5;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw IoError("read failed for '" + path.string() + "'");
    }
    return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot write '" + tmp.string() + "'");
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out.flush()) {
            throw IoError("write failed for '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot rename onto '" + path.string() + "'");
    }
}

LoadedData load_data(const DataSource& src, std::uint64_t seed) {
    if (src.input.has_value() == src.synth.has_value()) {
        throw ConfigError("exactly one of input path and synth spec must be set");
    }
    auto from_dataset = [](const Dataset& raw) {
        auto [ds, stats] = clean(raw);
        return LoadedData{to_matrix(ds), stats, ds.source_name};
    };
    if (src.input) {
        return from_dataset(parse_flow_csv(read_file(*src.input), src.input->string()));
    }
    const auto cfg = synth_config(*src.synth, seed);
    switch (src.synth->kind) {
    case SynthKind::blobs: return from_dataset(gen_blobs(cfg));
    case SynthKind::iotmix: return from_dataset(gen_iot_mix(cfg));
    case SynthKind::xor_: return {gen_xor(cfg), std::nullopt, "synth:xor"};
    }
    throw ConfigError("unknown synth kind");
}

std::string generate_csv(const SynthSpec& spec, std::uint64_t seed) {
    const auto cfg = synth_config(spec, seed);
    switch (spec.kind) {
    case SynthKind::blobs: return write_flow_csv(gen_blobs(cfg));
    case SynthKind::iotmix: return write_flow_csv(gen_iot_mix(cfg));
    case SynthKind::xor_: return write_matrix_csv(gen_xor(cfg));
    }
    throw ConfigError("unknown synth kind");
}

void validate(const BenchConfig& cfg) {
    const auto& src = cfg.source;
    if (src.input.has_value() == src.synth.has_value()) {
        throw ConfigError("exactly one of --input and --synth must be given");
    }
    try {
        if (src.synth) {
            validate(synth_config(*src.synth, cfg.seed));
        }
        validate(cfg.models.gbt);
        validate(cfg.models.sgd);
    } catch (const ArgumentError& e) {
        throw ConfigError(e.what());
    }
    if (!(cfg.train_fraction > 0.0 && cfg.train_fraction < 1.0)) {
        throw ConfigError("train fraction must lie in (0, 1)");
    }
    if (!(cfg.threshold >= 0.0 && cfg.threshold < 1.0)) {
        throw ConfigError("feature threshold must lie in [0, 1)");
    }
    if (cfg.models.knn_k < 1) {
        throw ConfigError("knn k must be at least 1");
    }
}

std::string canonical_config(const BenchConfig& cfg) {
    std::string out;
    auto line = [&out](std::string_view key, const std::string& value) {
        out.append(key).append("=").append(value).append("\n");
    };
    const auto& src = cfg.source;
    line("input", src.input ? src.input->generic_string() : "");
    line("synth", src.synth ? std::string(to_string(src.synth->kind)) : "");
    line("rows", src.synth ? std::to_string(src.synth->rows) : "");
    line("attack_fraction", src.synth ? number(src.synth->attack_fraction) : "");
    line("noise", src.synth && src.synth->noise ? number(*src.synth->noise) : "");
    line("train_fraction", number(cfg.train_fraction));
    line("seed", std::to_string(cfg.seed));
    line("threshold", number(cfg.threshold));
    const auto& g = cfg.models.gbt;
    line("gbt_rounds", std::to_string(g.n_rounds));
    line("gbt_max_depth", std::to_string(g.max_depth));
    line("gbt_learning_rate", number(g.learning_rate));
    line("gbt_lambda", number(g.lambda));
    line("gbt_gamma", number(g.gamma));
    line("gbt_min_child_weight", number(g.min_child_weight));
    line("knn_k", std::to_string(cfg.models.knn_k));
    line("sgd_learning_rate", number(cfg.models.sgd.learning_rate));
    line("sgd_epochs", std::to_string(cfg.models.sgd.epochs));
    line("sgd_l2", number(cfg.models.sgd.l2));
    line("out", cfg.out_dir.generic_string());
    return out;
}

std::string config_digest(const BenchConfig& cfg) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical_config(cfg)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

const ModelResult& BenchReport::result(ModelKind k) const {
    for (const auto& m : models) {
        if (m.kind == k) {
            return m;
        }
    }
    throw ArgumentError("report has no entry for " + std::string(display_name(k)));
}

BenchReport run_benchmark(const BenchConfig& cfg) {
    validate(cfg);
    auto data = load_data(cfg.source, cfg.seed);
    auto [train_raw, test_raw] = stratified_split(data.matrix, cfg.train_fraction, cfg.seed);

    const auto mask = select_features(train_raw, cfg.threshold);
    const auto train_sel = apply_mask(mask, train_raw);
    const auto scaler = fit_minmax(train_sel);
    const auto train = transform_minmax(scaler, train_sel);
    const auto test = transform_minmax(scaler, apply_mask(mask, test_raw));

    ModelParams params = cfg.models;
    params.sgd.seed = cfg.seed;

    // Each task reads only the shared immutable splits.
    std::vector<std::future<ModelResult>> tasks;
    for (auto kind : all_model_kinds) {
        tasks.push_back(std::async(std::launch::async, [&, kind] {
            ModelResult r;
            r.kind = kind;
            auto start = std::chrono::steady_clock::now();
            const auto model = fit(kind, train, params);
            r.fit_seconds = seconds_since(start);
            start = std::chrono::steady_clock::now();
            const auto pred = predict(model, test);
            r.predict_seconds = seconds_since(start);
            r.confusion = confusion(test.labels(), pred.labels);
            r.metrics = report(r.confusion);
            return r;
        }));
    }

    BenchReport rep;
    for (auto& t : tasks) {
        rep.models.push_back(t.get());
    }
    rep.seed = cfg.seed;
    rep.config_digest = config_digest(cfg);
    rep.source_name = data.source_name;
    rep.clean = data.clean;
    rep.rows_total = data.matrix.rows();
    rep.rows_train = train.rows();
    rep.rows_test = test.rows();
    rep.kept_features = train.column_names();
    return rep;
}

std::string emit_table(const BenchReport& r) {
    static constexpr std::size_t name_width = 10;
    auto pad = [](std::string_view s) {
        std::string out(s);
        out.resize(std::max(out.size(), name_width), ' ');
        return out;
    };
    std::string out;
    out += "# source: " + r.source_name + "\n";
    out += "# seed: " + std::to_string(r.seed) + "  train rows: " + std::to_string(r.rows_train) +
           "  test rows: " + std::to_string(r.rows_test) + "\n";
    out += "# features:";
    for (const auto& f : r.kept_features) {
        out += " " + f;
    }
    out += "\n";
    out += pad("Model") + " | Accuracy | Precision | Recall | F1 Score\n";
    out += std::string(name_width, '-') + "-+----------+-----------+--------+---------\n";
    for (auto kind : all_model_kinds) {
        const auto& m = r.result(kind).metrics;
        out += pad(display_name(kind)) + " | " + percent(m.accuracy) + " | " + percent(m.precision) +
               " | " + percent(m.recall) + " | " + percent(m.f1) + "\n";
    }
    return out;
}

std::string emit_heatmap_csv(const BenchReport& r) {
    std::string out = "model,metric,value\n";
    for (auto kind : all_model_kinds) {
        const auto& m = r.result(kind).metrics;
        const std::pair<const char*, double> cells[] = {
            {"accuracy", m.accuracy}, {"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}};
        for (const auto& [metric, value] : cells) {
            out += std::string(display_name(kind)) + "," + metric + "," + fixed6(value) + "\n";
        }
    }
    return out;
}

std::string emit_report_json(const BenchReport& r) {
    using nlohmann::json;
    json models = json::array();
    for (const auto& m : r.models) {
        models.push_back({{"model", display_name(m.kind)},
                          {"confusion", {{"tp", m.confusion.tp}, {"tn", m.confusion.tn},
                                         {"fp", m.confusion.fp}, {"fn", m.confusion.fn}}},
                          {"metrics", {{"accuracy", m.metrics.accuracy}, {"precision", m.metrics.precision},
                                       {"recall", m.metrics.recall}, {"f1", m.metrics.f1}}},
                          {"fit_seconds", m.fit_seconds},
                          {"predict_seconds", m.predict_seconds}});
    }
    json doc = {{"seed", r.seed},
                {"config_digest", r.config_digest},
                {"source", r.source_name},
                {"rows", {{"total", r.rows_total}, {"train", r.rows_train}, {"test", r.rows_test}}},
                {"kept_features", r.kept_features},
                {"models", models}};
    if (r.clean) {
        doc["clean"] = {{"rows_in", r.clean->rows_in},
                        {"rows_dropped_missing", r.clean->rows_dropped_missing},
                        {"rows_dropped_range", r.clean->rows_dropped_range},
                        {"rows_out", r.clean->rows_out}};
    }
    return doc.dump(2) + "\n";
}

void write_report_files(const BenchReport& r, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create output directory '" + dir.string() + "'");
    }
    write_file_atomic(dir / "report.txt", emit_table(r));
    write_file_atomic(dir / "heatmap.csv", emit_heatmap_csv(r));
    write_file_atomic(dir / "report.json", emit_report_json(r));
}

} // namespace ddosml
