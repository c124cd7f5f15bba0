// ddosml: generate synthetic flows, train/evaluate single models, and run the
// four-model comparison.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ddosml/artifact.hpp"
#include "ddosml/bench.hpp"
#include "ddosml/error.hpp"
#include "ddosml/preprocess.hpp"

namespace {

using namespace ddosml;

enum ExitCode : int {
    exit_ok = 0,
    exit_internal = 1,
    exit_config = 2,
    exit_io = 3,
    exit_parse = 4,
    exit_empty = 5,
    exit_stratification = 6,
    exit_model = 7,
};

int exit_code_for(const Error& e) {
    if (dynamic_cast<const ConfigError*>(&e)) return exit_config;
    if (dynamic_cast<const IoError*>(&e)) return exit_io;
    if (dynamic_cast<const ParseError*>(&e)) return exit_parse;
    if (dynamic_cast<const EmptyDatasetError*>(&e)) return exit_empty;
    if (dynamic_cast<const StratificationError*>(&e)) return exit_stratification;
    return exit_model;
}

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += (c == '\n' || c == '\r') ? ' ' : c;
    }
    return out;
}

int fail(std::string_view kind, int code, std::string_view message) {
    std::cerr << "error kind=" << kind << " exit=" << code << " message=\"" << escape(message) << "\"\n";
    return code;
}

// Flags shared by every subcommand that reads or generates data.
struct SourceFlags {
    std::string input;
    std::string synth;
    std::size_t rows = 1000;
    double attack_fraction = 0.5;
    double noise = -1.0; // negative: generator default
    std::uint64_t seed = 42;

    void add(CLI::App& app, bool with_input = true) {
        if (with_input) {
            app.add_option("--input", input, "Flow CSV (pkt_size_mean,pkt_rate,duration,protocol,label)");
        }
        app.add_option("--synth", synth, "Synthetic generator")
            ->check(CLI::IsMember({"blobs", "xor", "iotmix"}));
        app.add_option("--rows", rows, "Synthetic row count")->capture_default_str();
        app.add_option("--attack-fraction", attack_fraction, "Synthetic ddos fraction")->capture_default_str();
        app.add_option("--noise", noise, "Synthetic noise sigma (default depends on generator)");
        app.add_option("--seed", seed, "Seed for generation, splitting and SGD")->capture_default_str();
    }

    DataSource source() const {
        DataSource src;
        if (!input.empty()) {
            src.input = input;
        }
        if (!synth.empty()) {
            src.synth = synth_spec();
        }
        return src;
    }

    SynthSpec synth_spec() const {
        SynthSpec s;
        s.kind = *synth_kind_from_string(synth);
        s.rows = rows;
        s.attack_fraction = attack_fraction;
        if (noise >= 0.0) {
            s.noise = noise;
        }
        return s;
    }
};

struct ModelFlags {
    ModelParams params;

    void add(CLI::App& app) {
        auto& g = params.gbt;
        app.add_option("--gbt-rounds", g.n_rounds, "GBT boosting rounds")->capture_default_str();
        app.add_option("--gbt-depth", g.max_depth, "GBT maximum tree depth")->capture_default_str();
        app.add_option("--gbt-lr", g.learning_rate, "GBT learning rate")->capture_default_str();
        app.add_option("--gbt-lambda", g.lambda, "GBT L2 leaf penalty")->capture_default_str();
        app.add_option("--gbt-gamma", g.gamma, "GBT split penalty")->capture_default_str();
        app.add_option("--gbt-min-child-weight", g.min_child_weight, "GBT minimum child hessian sum")
            ->capture_default_str();
        app.add_option("--knn-k", params.knn_k, "KNN neighbours")->capture_default_str();
        app.add_option("--sgd-lr", params.sgd.learning_rate, "SGD learning rate")->capture_default_str();
        app.add_option("--sgd-epochs", params.sgd.epochs, "SGD epochs")->capture_default_str();
        app.add_option("--sgd-l2", params.sgd.l2, "SGD L2 penalty")->capture_default_str();
    }
};

void print_metrics(std::ostream& os, const ConfusionMatrix& cm, const MetricReport& m) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "tp=%zu tn=%zu fp=%zu fn=%zu\naccuracy=%.6f precision=%.6f recall=%.6f f1=%.6f\n",
                  cm.tp, cm.tn, cm.fp, cm.fn, m.accuracy, m.precision, m.recall, m.f1);
    os << buf;
}

int run_generate(const SourceFlags& src, const std::string& out) {
    if (src.synth.empty()) {
        throw ConfigError("generate needs --synth");
    }
    SynthConfig check{src.rows, src.attack_fraction, src.seed, 0.0};
    try {
        validate(check);
    } catch (const ArgumentError& e) {
        throw ConfigError(e.what());
    }
    const auto csv = generate_csv(src.synth_spec(), src.seed);
    if (out.empty() || out == "-") {
        std::cout << csv;
    } else {
        write_file_atomic(out, csv);
    }
    return exit_ok;
}

int run_train(const SourceFlags& src, const ModelFlags& flags, const std::string& model_name,
              double threshold, const std::string& out) {
    const auto kind = model_kind_from_string(model_name);
    if (!kind) {
        throw ConfigError("unknown model '" + model_name + "'");
    }
    BenchConfig cfg;
    cfg.source = src.source();
    cfg.seed = src.seed;
    cfg.threshold = threshold;
    cfg.models = flags.params;
    validate(cfg);

    auto data = load_data(cfg.source, cfg.seed);
    ModelArtifact a;
    a.input_columns = data.matrix.column_names();
    a.mask = select_features(data.matrix, threshold);
    const auto selected = apply_mask(a.mask, data.matrix);
    a.scaler = fit_minmax(selected);
    ModelParams params = flags.params;
    params.sgd.seed = src.seed;
    a.model = fit(*kind, transform_minmax(a.scaler, selected), params);
    a.seed = src.seed;
    write_artifact_file(a, out);
    std::cout << "trained " << display_name(*kind) << " on " << data.matrix.rows() << " rows, "
              << a.mask.kept.size() << " features -> " << out << "\n";
    return exit_ok;
}

int run_evaluate(const SourceFlags& src, const std::string& artifact_path, const std::string& out) {
    const auto a = read_artifact_file(artifact_path);
    const auto source = src.source();
    if (source.input.has_value() == source.synth.has_value()) {
        throw ConfigError("exactly one of --input and --synth must be given");
    }
    auto data = load_data(source, src.seed);
    const auto pred = predict_raw(a, data.matrix);
    const auto cm = confusion(data.matrix.labels(), pred.labels);
    const auto m = report(cm);
    std::cout << "model=" << display_name(a.kind()) << " rows=" << data.matrix.rows() << "\n";
    print_metrics(std::cout, cm, m);
    if (!out.empty()) {
        nlohmann::json doc = {{"model", display_name(a.kind())},
                              {"rows", data.matrix.rows()},
                              {"confusion", {{"tp", cm.tp}, {"tn", cm.tn}, {"fp", cm.fp}, {"fn", cm.fn}}},
                              {"accuracy", m.accuracy},
                              {"precision", m.precision},
                              {"recall", m.recall},
                              {"f1", m.f1}};
        write_file_atomic(out, doc.dump(2) + "\n");
    }
    return exit_ok;
}

int run_bench(const SourceFlags& src, const ModelFlags& flags, double train_fraction, double threshold,
              const std::string& out) {
    BenchConfig cfg;
    cfg.source = src.source();
    cfg.seed = src.seed;
    cfg.train_fraction = train_fraction;
    cfg.threshold = threshold;
    cfg.models = flags.params;
    cfg.out_dir = out;
    const auto rep = run_benchmark(cfg);
    write_report_files(rep, cfg.out_dir);
    std::cout << emit_table(rep);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"DDoS flow classification: data generation, training, evaluation and benchmarking"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "ddosml 0.1.0");
    // Keys go under a [generate], [train], [evaluate] or [bench] section.
    app.set_config("--config", "", "TOML/INI config file; command-line flags override it");

    SourceFlags gen_src;
    std::string gen_out;
    auto* gen = app.add_subcommand("generate", "Write a synthetic dataset as CSV");
    gen_src.add(*gen, false);
    gen->add_option("--out", gen_out, "Output CSV path (stdout when omitted)");

    SourceFlags train_src;
    ModelFlags train_models;
    std::string train_model;
    std::string train_out;
    double train_threshold = default_feature_threshold;
    auto* train = app.add_subcommand("train", "Fit one model on a dataset and save a model artifact");
    train_src.add(*train);
    train_models.add(*train);
    train->add_option("--model", train_model, "gbt, knn, sgd or gnb")->required();
    train->add_option("--threshold", train_threshold, "Feature-selection |r| threshold")->capture_default_str();
    train->add_option("--out", train_out, "Artifact path")->required();

    SourceFlags eval_src;
    std::string eval_artifact;
    std::string eval_out;
    auto* eval = app.add_subcommand("evaluate", "Score a model artifact against a labeled dataset");
    eval_src.add(*eval);
    eval->add_option("--artifact", eval_artifact, "Model artifact written by `train`")->required();
    eval->add_option("--out", eval_out, "Optional JSON metric report path");

    SourceFlags bench_src;
    ModelFlags bench_models;
    double bench_train_fraction = 0.8;
    double bench_threshold = default_feature_threshold;
    std::string bench_out = "bench_out";
    auto* bench = app.add_subcommand("bench", "Train and compare all four models");
    bench_src.add(*bench);
    bench_models.add(*bench);
    bench->add_option("--train-fraction", bench_train_fraction, "Stratified train share")->capture_default_str();
    bench->add_option("--threshold", bench_threshold, "Feature-selection |r| threshold")->capture_default_str();
    bench->add_option("--out", bench_out, "Output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", exit_config, e.what());
    }

    try {
        if (*gen) return run_generate(gen_src, gen_out);
        if (*train) return run_train(train_src, train_models, train_model, train_threshold, train_out);
        if (*eval) return run_evaluate(eval_src, eval_artifact, eval_out);
        if (*bench) return run_bench(bench_src, bench_models, bench_train_fraction, bench_threshold, bench_out);
    } catch (const Error& e) {
        return fail(e.kind(), exit_code_for(e), e.what());
    } catch (const std::exception& e) {
        return fail("internal", exit_internal, e.what());
    }
    return exit_internal;
}
