#include <cmath>
#include <numbers>

#include "learn_internal.hpp"

namespace qsmote {

NaiveBayesModel fit_naive_bayes(const Eigen::MatrixXd& x, const std::vector<int>& y,
                                const std::vector<int>& classes) {
    const Eigen::Index n = x.rows();
    const Eigen::Index d = x.cols();
    const auto k = static_cast<Eigen::Index>(classes.size());

    // Variance floor relative to the largest per-feature variance of the
    // whole training matrix; keeps log-likelihoods finite on constant
    // features.
    double max_var = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) {
        const double mean = x.col(j).mean();
        max_var = std::max(max_var, (x.col(j).array() - mean).square().sum() /
                                        static_cast<double>(n));
    }
    const double eps = 1e-9 * std::max(max_var, 1e-300);

    NaiveBayesModel model;
    model.means = Eigen::MatrixXd::Zero(k, d);
    model.variances = Eigen::MatrixXd::Zero(k, d);
    model.log_priors.resize(k);

    for (Eigen::Index ci = 0; ci < k; ++ci) {
        const int cls = classes[static_cast<std::size_t>(ci)];
        Eigen::Index count = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (y[static_cast<std::size_t>(i)] != cls) continue;
            model.means.row(ci) += x.row(i);
            ++count;
        }
        model.means.row(ci) /= static_cast<double>(count);
        for (Eigen::Index i = 0; i < n; ++i) {
            if (y[static_cast<std::size_t>(i)] != cls) continue;
            model.variances.row(ci) +=
                (x.row(i) - model.means.row(ci)).array().square().matrix();
        }
        model.variances.row(ci) /= static_cast<double>(count);
        model.variances.row(ci).array() += eps;
        model.log_priors[ci] =
            std::log(static_cast<double>(count) / static_cast<double>(n));
    }
    return model;
}

std::vector<int> predict_naive_bayes(const NaiveBayesModel& model,
                                     const std::vector<int>& classes, const Eigen::MatrixXd& x) {
    const auto k = static_cast<Eigen::Index>(classes.size());
    std::vector<int> out(static_cast<std::size_t>(x.rows()));
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        Eigen::Index best = 0;
        double best_ll = -std::numeric_limits<double>::infinity();
        for (Eigen::Index ci = 0; ci < k; ++ci) {
            double ll = model.log_priors[ci];
            for (Eigen::Index j = 0; j < x.cols(); ++j) {
                const double var = model.variances(ci, j);
                const double diff = x(i, j) - model.means(ci, j);
                ll -= 0.5 * (std::log(2.0 * std::numbers::pi * var) + diff * diff / var);
            }
            if (ll > best_ll) {
                best_ll = ll;
                best = ci;
            }
        }
        out[static_cast<std::size_t>(i)] = classes[static_cast<std::size_t>(best)];
    }
    return out;
}

}  // namespace qsmote
