#include "ddosml/metrics.hpp"

#include <string>

#include "ddosml/error.hpp"
#include "ddosml/feature_matrix.hpp"

namespace ddosml {
namespace {

double ratio(std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

} // namespace

ConfusionMatrix confusion(std::span<const int> truth, std::span<const int> pred) {
    if (truth.size() != pred.size()) {
        throw ArgumentError("confusion: " + std::to_string(truth.size()) + " truths vs " +
                            std::to_string(pred.size()) + " predictions");
    }
    if (truth.empty()) {
        throw ArgumentError("confusion: no rows");
    }
    require_binary(truth);
    require_binary(pred);

    ConfusionMatrix cm;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i] == 1) {
            (pred[i] == 1 ? cm.tp : cm.fn)++;
        } else {
            (pred[i] == 1 ? cm.fp : cm.tn)++;
        }
    }
    return cm;
}

MetricReport report(const ConfusionMatrix& cm) {
    if (cm.total() == 0) {
        throw ArgumentError("report: empty confusion matrix");
    }
    MetricReport r;
    r.accuracy = ratio(cm.tp + cm.tn, cm.total());
    r.precision = ratio(cm.tp, cm.tp + cm.fp);
    r.recall = ratio(cm.tp, cm.tp + cm.fn);
    const double pr = r.precision + r.recall;
    r.f1 = pr > 0.0 ? 2.0 * r.precision * r.recall / pr : 0.0;
    return r;
}

} // namespace ddosml
