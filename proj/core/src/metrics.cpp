#include "qsmote/errors.hpp"
#include "qsmote/eval.hpp"

namespace qsmote {

MetricsReport compute_metrics(const std::vector<int>& y_true, const std::vector<int>& y_pred,
                              int n_classes) {
    if (y_true.size() != y_pred.size())
        throw LengthMismatch("y_true has " + std::to_string(y_true.size()) + " entries, y_pred " +
                             std::to_string(y_pred.size()));
    const auto n = y_true.size();
    const auto k = static_cast<std::size_t>(n_classes);

    std::vector<Eigen::Index> tp(k, 0);
    std::vector<Eigen::Index> pred_count(k, 0);
    std::vector<Eigen::Index> true_count(k, 0);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto t = static_cast<std::size_t>(y_true[i]);
        const auto p = static_cast<std::size_t>(y_pred[i]);
        if (t >= k || p >= k) throw InternalError("label out of range in compute_metrics");
        ++true_count[t];
        ++pred_count[p];
        if (t == p) {
            ++tp[t];
            ++correct;
        }
    }

    MetricsReport report;
    report.support.assign(true_count.begin(), true_count.end());
    report.accuracy = n > 0 ? static_cast<double>(correct) / static_cast<double>(n) : 0.0;

    for (std::size_t c = 0; c < k; ++c) {
        // zero_division=0: empty denominators contribute zero.
        const double precision =
            pred_count[c] > 0 ? static_cast<double>(tp[c]) / static_cast<double>(pred_count[c])
                              : 0.0;
        const double recall =
            true_count[c] > 0 ? static_cast<double>(tp[c]) / static_cast<double>(true_count[c])
                              : 0.0;
        const double f1 =
            precision + recall > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
        const double weight = static_cast<double>(true_count[c]) / static_cast<double>(n);
        report.precision_weighted += weight * precision;
        report.recall_weighted += weight * recall;
        report.f1_weighted += weight * f1;
    }
    return report;
}

}  // namespace qsmote
