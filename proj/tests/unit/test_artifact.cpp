#include <doctest.h>

#include <filesystem>

#include "ddosml/artifact.hpp"
#include "ddosml/error.hpp"
#include "ddosml/flowdata.hpp"
#include "ddosml/synth.hpp"

using namespace ddosml;

namespace {

ModelArtifact train_artifact(ModelKind kind, const FeatureMatrix& raw, std::uint64_t seed) {
    ModelArtifact a;
    a.input_columns = raw.column_names();
    a.mask = select_features(raw);
    auto sel = apply_mask(a.mask, raw);
    a.scaler = fit_minmax(sel);
    ModelParams p;
    p.gbt.n_rounds = 20;
    p.sgd.seed = seed;
    a.model = fit(kind, transform_minmax(a.scaler, sel), p);
    a.seed = seed;
    return a;
}

} // namespace

TEST_CASE("artifacts round-trip to identical predictions") {
    auto train = to_matrix(clean(gen_iot_mix({400, 0.3, 1, 1.0})).first);
    auto test = to_matrix(clean(gen_iot_mix({100, 0.3, 2, 1.0})).first);
    for (auto kind : all_model_kinds) {
        CAPTURE(display_name(kind));
        const auto a = train_artifact(kind, train, 9);
        const auto text = save_artifact(a);
        const auto b = load_artifact(text);
        CHECK(b.kind() == kind);
        CHECK(b.seed == 9);
        CHECK(b.mask == a.mask);
        CHECK(b.scaler == a.scaler);
        CHECK(b.input_columns == a.input_columns);
        const auto pa = predict_raw(a, test);
        const auto pb = predict_raw(b, test);
        CHECK(pa.probability == pb.probability);
        CHECK(pa.labels == pb.labels);
        CHECK(save_artifact(b) == text);
    }
}

TEST_CASE("artifact files") {
    auto train = to_matrix(clean(gen_blobs({100, 0.5, 3, 0.5})).first);
    const auto path = std::filesystem::temp_directory_path() / "ddosml_artifact_test.json";
    write_artifact_file(train_artifact(ModelKind::gnb, train, 1), path);
    CHECK(read_artifact_file(path).kind() == ModelKind::gnb);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_artifact_file(path), IoError);
}

TEST_CASE("malformed artifacts are parse errors") {
    CHECK_THROWS_AS(load_artifact("not json"), ParseError);
    CHECK_THROWS_AS(load_artifact("{}"), ParseError);
    CHECK_THROWS_AS(load_artifact(R"({"format":"other","version":1})"), ParseError);

    auto train = to_matrix(clean(gen_blobs({100, 0.5, 3, 0.5})).first);
    auto text = save_artifact(train_artifact(ModelKind::sgd, train, 1));
    auto pos = text.find("\"kind\": \"sgd\"");
    REQUIRE(pos != std::string::npos);
    auto bad_kind = text;
    bad_kind.replace(pos, 13, "\"kind\": \"svm\"");
    CHECK_THROWS_AS(load_artifact(bad_kind), ParseError);
    auto bad_version = text;
    bad_version.replace(bad_version.find("\"version\": 1"), 12, "\"version\": 7");
    CHECK_THROWS_AS(load_artifact(bad_version), ParseError);
}

TEST_CASE("predict_raw rejects a different column layout") {
    auto train = to_matrix(clean(gen_blobs({100, 0.5, 3, 0.5})).first);
    auto a = train_artifact(ModelKind::knn, train, 1);
    CHECK_THROWS_AS(predict_raw(a, FeatureMatrix(1, {"x1", "x2"}, {0, 0})), ShapeError);
}
