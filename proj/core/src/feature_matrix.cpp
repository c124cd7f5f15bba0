#include "ddosml/feature_matrix.hpp"

#include <unordered_set>

#include "ddosml/error.hpp"

namespace ddosml {

FeatureMatrix::FeatureMatrix(std::size_t rows, std::vector<std::string> column_names,
                             std::vector<double> values, std::optional<Labels> labels)
    : rows_(rows), column_names_(std::move(column_names)), values_(std::move(values)),
      labels_(std::move(labels)) {
    if (values_.size() != rows_ * column_names_.size()) {
        throw ShapeError("feature matrix: " + std::to_string(values_.size()) + " values for " +
                         std::to_string(rows_) + "x" + std::to_string(column_names_.size()));
    }
    std::unordered_set<std::string> seen;
    for (const auto& name : column_names_) {
        if (!seen.insert(name).second) {
            throw ShapeError("feature matrix: duplicate column name '" + name + "'");
        }
    }
    if (labels_ && labels_->size() != rows_) {
        throw ShapeError("feature matrix: " + std::to_string(labels_->size()) + " labels for " +
                         std::to_string(rows_) + " rows");
    }
}

const Labels& FeatureMatrix::labels() const {
    if (!labels_) {
        throw ArgumentError("feature matrix has no labels");
    }
    return *labels_;
}

FeatureMatrix FeatureMatrix::take_rows(std::span<const std::size_t> indices) const {
    std::vector<double> out;
    out.reserve(indices.size() * cols());
    std::optional<Labels> out_labels;
    if (labels_) {
        out_labels.emplace();
        out_labels->reserve(indices.size());
    }
    for (auto i : indices) {
        auto r = row(i);
        out.insert(out.end(), r.begin(), r.end());
        if (labels_) {
            out_labels->push_back((*labels_)[i]);
        }
    }
    return {indices.size(), column_names_, std::move(out), std::move(out_labels)};
}

FeatureMatrix FeatureMatrix::take_cols(std::span<const std::size_t> indices) const {
    std::vector<std::string> names;
    names.reserve(indices.size());
    for (auto c : indices) {
        if (c >= cols()) {
            throw ShapeError("column index " + std::to_string(c) + " out of range");
        }
        names.push_back(column_names_[c]);
    }
    std::vector<double> out;
    out.reserve(rows_ * indices.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (auto c : indices) {
            out.push_back(at(r, c));
        }
    }
    return {rows_, std::move(names), std::move(out), labels_};
}

void require_binary(std::span<const int> labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != 0 && labels[i] != 1) {
            throw ArgumentError("label at row " + std::to_string(i) + " is " +
                                std::to_string(labels[i]) + ", expected 0 or 1");
        }
    }
}

} // namespace ddosml
