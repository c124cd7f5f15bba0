#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ddosml {

using Labels = std::vector<int>;

// Dense row-major matrix of features with unique column names and optional
// per-row binary labels.
class FeatureMatrix {
public:
    FeatureMatrix() = default;

    // Throws ShapeError when values.size() != rows * column_names.size(), when
    // column names repeat, or when labels are present with the wrong length.
    FeatureMatrix(std::size_t rows, std::vector<std::string> column_names,
                  std::vector<double> values, std::optional<Labels> labels = std::nullopt);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return column_names_.size(); }

    std::span<const double> row(std::size_t i) const {
        return {values_.data() + i * cols(), cols()};
    }
    double at(std::size_t r, std::size_t c) const { return values_[r * cols() + c]; }

    const std::vector<double>& values() const noexcept { return values_; }
    const std::vector<std::string>& column_names() const noexcept { return column_names_; }

    bool has_labels() const noexcept { return labels_.has_value(); }
    // Throws ArgumentError when the matrix carries no labels.
    const Labels& labels() const;
    const std::optional<Labels>& maybe_labels() const noexcept { return labels_; }

    // New matrix holding the given rows in the given order.
    FeatureMatrix take_rows(std::span<const std::size_t> indices) const;
    // New matrix holding the given columns in the given order.
    FeatureMatrix take_cols(std::span<const std::size_t> indices) const;

    bool operator==(const FeatureMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::vector<std::string> column_names_;
    std::vector<double> values_;
    std::optional<Labels> labels_;
};

// Throws ArgumentError unless every label is 0 or 1.
void require_binary(std::span<const int> labels);

} // namespace ddosml
