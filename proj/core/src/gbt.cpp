#include "ddosml/gbt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ddosml/error.hpp"
#include "ddosml/logistic.hpp"

namespace ddosml {
namespace {

// G^2 / (H + lambda), guarded for an all-saturated node with lambda = 0.
double structure_score(double g, double h, double lambda) {
    const double den = h + lambda;
    return den > 0.0 ? g * g / den : 0.0;
}

double leaf_weight(double g, double h, double lambda) {
    const double den = h + lambda;
    return den > 0.0 ? -g / den : 0.0;
}

// Exact greedy tree growth. Each node owns, per feature, its rows sorted by
// that feature's value; children receive stable partitions of those lists.
class TreeBuilder {
public:
    TreeBuilder(const FeatureMatrix& x, const std::vector<double>& grad,
                const std::vector<double>& hess, const GbtParams& params)
        : x_(x), grad_(grad), hess_(hess), params_(params), goes_left_(x.rows(), 0) {}

    RegressionTree build(std::vector<std::vector<std::size_t>> sorted, std::vector<std::size_t> rows) {
        tree_ = {};
        grow(std::move(sorted), std::move(rows), 0);
        return std::move(tree_);
    }

private:
    struct Split {
        double gain = 0.0;
        std::size_t feature = 0;
        double threshold = 0.0;
        bool found = false;
    };

    std::int32_t grow(std::vector<std::vector<std::size_t>> sorted, std::vector<std::size_t> rows,
                      std::size_t depth) {
        double g_sum = 0.0;
        double h_sum = 0.0;
        for (auto r : rows) {
            g_sum += grad_[r];
            h_sum += hess_[r];
        }

        const auto id = static_cast<std::int32_t>(tree_.nodes.size());
        tree_.nodes.emplace_back();

        Split best;
        if (depth < params_.max_depth && rows.size() > 1) {
            best = find_split(sorted, g_sum, h_sum);
        }
        if (!best.found) {
            tree_.nodes[id].weight = leaf_weight(g_sum, h_sum, params_.lambda);
            return id;
        }

        const auto& by_feature = sorted[best.feature];
        for (auto r : by_feature) {
            goes_left_[r] = x_.at(r, best.feature) < best.threshold ? 1 : 0;
        }
        auto partition = [this](const std::vector<std::size_t>& in) {
            std::pair<std::vector<std::size_t>, std::vector<std::size_t>> out;
            for (auto r : in) {
                (goes_left_[r] ? out.first : out.second).push_back(r);
            }
            return out;
        };
        std::vector<std::vector<std::size_t>> left_sorted(sorted.size());
        std::vector<std::vector<std::size_t>> right_sorted(sorted.size());
        for (std::size_t f = 0; f < sorted.size(); ++f) {
            std::tie(left_sorted[f], right_sorted[f]) = partition(sorted[f]);
        }
        auto [left_rows, right_rows] = partition(rows);
        sorted.clear();
        rows.clear();

        const auto left = grow(std::move(left_sorted), std::move(left_rows), depth + 1);
        const auto right = grow(std::move(right_sorted), std::move(right_rows), depth + 1);
        auto& node = tree_.nodes[id];
        node.feature = static_cast<std::int32_t>(best.feature);
        node.threshold = best.threshold;
        node.left = left;
        node.right = right;
        return id;
    }

    Split find_split(const std::vector<std::vector<std::size_t>>& sorted, double g_sum,
                     double h_sum) const {
        const double lambda = params_.lambda;
        const double parent = structure_score(g_sum, h_sum, lambda);
        Split best;
        for (std::size_t f = 0; f < sorted.size(); ++f) {
            const auto& order = sorted[f];
            double gl = 0.0;
            double hl = 0.0;
            for (std::size_t i = 0; i + 1 < order.size(); ++i) {
                gl += grad_[order[i]];
                hl += hess_[order[i]];
                const double v = x_.at(order[i], f);
                const double next = x_.at(order[i + 1], f);
                if (!(v < next)) {
                    continue;
                }
                const double gr = g_sum - gl;
                const double hr = h_sum - hl;
                if (hl < params_.min_child_weight || hr < params_.min_child_weight) {
                    continue;
                }
                const double gain = 0.5 * (structure_score(gl, hl, lambda) +
                                           structure_score(gr, hr, lambda) - parent) -
                                    params_.gamma;
                if (gain > 0.0 && (!best.found || gain > best.gain)) {
                    double threshold = v + (next - v) / 2.0;
                    if (!(v < threshold)) {
                        threshold = next; // adjacent doubles
                    }
                    best = {gain, f, threshold, true};
                }
            }
        }
        return best;
    }

    const FeatureMatrix& x_;
    const std::vector<double>& grad_;
    const std::vector<double>& hess_;
    const GbtParams& params_;
    std::vector<char> goes_left_;
    RegressionTree tree_;
};

void check_width(const GbtModel& m, const FeatureMatrix& rows) {
    if (rows.cols() != m.feature_count) {
        throw ShapeError("GBT model expects " + std::to_string(m.feature_count) + " features, got " +
                         std::to_string(rows.cols()));
    }
}

} // namespace

void validate(const GbtParams& p) {
    if (!(p.learning_rate > 0.0 && p.learning_rate <= 1.0)) {
        throw ArgumentError("GBT learning_rate must lie in (0, 1]");
    }
    if (!(p.lambda >= 0.0) || !(p.gamma >= 0.0) || !(p.min_child_weight >= 0.0)) {
        throw ArgumentError("GBT lambda, gamma and min_child_weight must be non-negative");
    }
}

double RegressionTree::evaluate(std::span<const double> row) const {
    std::size_t i = 0;
    while (!nodes[i].is_leaf()) {
        const auto& n = nodes[i];
        i = static_cast<std::size_t>(row[static_cast<std::size_t>(n.feature)] < n.threshold ? n.left : n.right);
    }
    return nodes[i].weight;
}

std::size_t RegressionTree::depth() const {
    if (nodes.empty()) {
        return 0;
    }
    std::size_t deepest = 0;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [i, d] = stack.back();
        stack.pop_back();
        deepest = std::max(deepest, d);
        if (!nodes[i].is_leaf()) {
            stack.emplace_back(static_cast<std::size_t>(nodes[i].left), d + 1);
            stack.emplace_back(static_cast<std::size_t>(nodes[i].right), d + 1);
        }
    }
    return deepest;
}

GbtModel fit_gbt(const FeatureMatrix& train, const GbtParams& params) {
    validate(params);
    if (train.rows() == 0) {
        throw FitError("GBT: empty training set");
    }
    const auto& y = train.labels();
    if (std::any_of(y.begin(), y.end(), [](int v) { return v != 0 && v != 1; })) {
        throw FitError("GBT: labels must be 0 or 1");
    }

    const std::size_t n = train.rows();
    const std::size_t n_features = train.cols();

    std::vector<std::size_t> all_rows(n);
    std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
    std::vector<std::vector<std::size_t>> presorted(n_features, all_rows);
    for (std::size_t f = 0; f < n_features; ++f) {
        std::stable_sort(presorted[f].begin(), presorted[f].end(),
                         [&](std::size_t a, std::size_t b) { return train.at(a, f) < train.at(b, f); });
    }

    GbtModel model;
    model.params = params;
    model.feature_count = n_features;
    model.base_logit = 0.0;
    model.trees.reserve(params.n_rounds);

    std::vector<double> logits(n, model.base_logit);
    std::vector<double> grad(n);
    std::vector<double> hess(n);
    TreeBuilder builder(train, grad, hess, params);
    for (std::size_t round = 0; round < params.n_rounds; ++round) {
        for (std::size_t i = 0; i < n; ++i) {
            grad[i] = logistic::gradient(logits[i], y[i]);
            hess[i] = logistic::hessian(logits[i]);
        }
        auto tree = builder.build(presorted, all_rows);
        for (std::size_t i = 0; i < n; ++i) {
            logits[i] += params.learning_rate * tree.evaluate(train.row(i));
        }
        model.trees.push_back(std::move(tree));
    }
    return model;
}

std::vector<double> predict_gbt_logits(const GbtModel& m, const FeatureMatrix& rows, std::size_t n_trees) {
    check_width(m, rows);
    n_trees = std::min(n_trees, m.trees.size());
    std::vector<double> out(rows.rows(), m.base_logit);
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        auto row = rows.row(r);
        for (std::size_t t = 0; t < n_trees; ++t) {
            out[r] += m.params.learning_rate * m.trees[t].evaluate(row);
        }
    }
    return out;
}

Predictions predict_gbt(const GbtModel& m, const FeatureMatrix& rows) {
    Predictions p;
    p.probability = predict_gbt_logits(m, rows);
    for (auto& z : p.probability) {
        z = logistic::sigmoid(z);
    }
    p.labels = threshold_labels(p.probability);
    return p;
}

} // namespace ddosml
