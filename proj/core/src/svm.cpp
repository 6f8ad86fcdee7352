#include <cmath>

#include "learn_internal.hpp"

namespace qsmote {

namespace {

// One binary soft-margin RBF machine trained with SMO-style pairwise
// coordinate ascent; labels are +1/-1.
SvmBinary train_binary(const Eigen::MatrixXd& x, const Eigen::VectorXd& labels,
                       const Eigen::MatrixXd& kernel, const SvmOptions& options) {
    const Eigen::Index n = x.rows();
    const double c = options.c;

    Eigen::VectorXd alpha = Eigen::VectorXd::Zero(n);
    double bias = 0.0;
    // Error cache: e_i = f(x_i) - y_i; with alpha = 0, f = bias = 0.
    Eigen::VectorXd errors = -labels;

    auto dual_objective = [&]() {
        double quad = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (alpha[i] == 0.0) continue;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (alpha[j] == 0.0) continue;
                quad += alpha[i] * alpha[j] * labels[i] * labels[j] * kernel(i, j);
            }
        }
        return alpha.sum() - 0.5 * quad;
    };

    SvmBinary machine;
    for (int pass = 0; pass < options.max_passes; ++pass) {
        int changed = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double ei = errors[i];
            const double r = ei * labels[i];
            const bool violates = (r < -options.tol && alpha[i] < c) ||
                                  (r > options.tol && alpha[i] > 0.0);
            if (!violates) continue;

            // Second-choice heuristic: the partner with the largest |e_i - e_j|.
            Eigen::Index j = -1;
            double best_gap = -1.0;
            for (Eigen::Index cand = 0; cand < n; ++cand) {
                if (cand == i) continue;
                const double gap = std::abs(ei - errors[cand]);
                if (gap > best_gap) {
                    best_gap = gap;
                    j = cand;
                }
            }
            if (j < 0) continue;

            const double yi = labels[i];
            const double yj = labels[j];
            const double ai_old = alpha[i];
            const double aj_old = alpha[j];

            double lo;
            double hi;
            if (yi != yj) {
                lo = std::max(0.0, aj_old - ai_old);
                hi = std::min(c, c + aj_old - ai_old);
            } else {
                lo = std::max(0.0, ai_old + aj_old - c);
                hi = std::min(c, ai_old + aj_old);
            }
            if (lo >= hi) continue;

            const double eta = 2.0 * kernel(i, j) - kernel(i, i) - kernel(j, j);
            if (eta >= 0.0) continue;  // non-positive curvature, skip the pair

            double aj = aj_old - yj * (ei - errors[j]) / eta;
            aj = std::min(hi, std::max(lo, aj));
            if (std::abs(aj - aj_old) < 1e-12) continue;
            const double ai = ai_old + yi * yj * (aj_old - aj);

            alpha[i] = ai;
            alpha[j] = aj;

            const double b1 = bias - ei - yi * (ai - ai_old) * kernel(i, i) -
                              yj * (aj - aj_old) * kernel(i, j);
            const double b2 = bias - errors[j] - yi * (ai - ai_old) * kernel(i, j) -
                              yj * (aj - aj_old) * kernel(j, j);
            double next_bias;
            if (ai > 0.0 && ai < c)
                next_bias = b1;
            else if (aj > 0.0 && aj < c)
                next_bias = b2;
            else
                next_bias = 0.5 * (b1 + b2);

            const double delta_b = next_bias - bias;
            for (Eigen::Index t = 0; t < n; ++t)
                errors[t] += yi * (ai - ai_old) * kernel(i, t) +
                             yj * (aj - aj_old) * kernel(j, t) + delta_b;
            bias = next_bias;
            ++changed;
        }
        machine.dual_trace.push_back(dual_objective());
        if (changed == 0) break;
    }

    // Keep only support vectors.
    std::vector<Eigen::Index> sv;
    for (Eigen::Index i = 0; i < n; ++i)
        if (alpha[i] > 0.0) sv.push_back(i);
    machine.support_vectors.resize(static_cast<Eigen::Index>(sv.size()), x.cols());
    machine.coeffs.resize(static_cast<Eigen::Index>(sv.size()));
    for (std::size_t t = 0; t < sv.size(); ++t) {
        machine.support_vectors.row(static_cast<Eigen::Index>(t)) = x.row(sv[t]);
        machine.coeffs[static_cast<Eigen::Index>(t)] = alpha[sv[t]] * labels[sv[t]];
    }
    machine.bias = bias;
    return machine;
}

double rbf(const Eigen::RowVectorXd& a, const Eigen::RowVectorXd& b, double gamma) {
    return std::exp(-gamma * (a - b).squaredNorm());
}

double decision_value(const SvmBinary& machine, double gamma, const Eigen::RowVectorXd& row) {
    double f = machine.bias;
    for (Eigen::Index i = 0; i < machine.support_vectors.rows(); ++i)
        f += machine.coeffs[i] * rbf(machine.support_vectors.row(i), row, gamma);
    return f;
}

}  // namespace

SvmModel fit_svm(const Eigen::MatrixXd& x, const std::vector<int>& y,
                 const std::vector<int>& classes, const SvmOptions& options) {
    const Eigen::Index n = x.rows();

    SvmModel model;
    if (options.gamma > 0.0) {
        model.gamma = options.gamma;
    } else {
        // "scale" convention: 1 / (d * Var(X)) over all matrix entries.
        const double mean = x.mean();
        const double var = (x.array() - mean).square().sum() /
                           static_cast<double>(x.size());
        model.gamma = var > 0.0 ? 1.0 / (static_cast<double>(x.cols()) * var) : 1.0;
    }

    Eigen::MatrixXd kernel(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        kernel(i, i) = 1.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            kernel(i, j) = rbf(x.row(i), x.row(j), model.gamma);
            kernel(j, i) = kernel(i, j);
        }
    }

    // One-vs-rest: one machine per class.
    for (int cls : classes) {
        Eigen::VectorXd labels(n);
        for (Eigen::Index i = 0; i < n; ++i)
            labels[i] = y[static_cast<std::size_t>(i)] == cls ? 1.0 : -1.0;
        model.per_class.push_back(train_binary(x, labels, kernel, options));
    }
    return model;
}

Eigen::MatrixXd svm_decisions(const SvmModel& model, const Eigen::MatrixXd& x) {
    Eigen::MatrixXd out(x.rows(), static_cast<Eigen::Index>(model.per_class.size()));
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < model.per_class.size(); ++k)
            out(i, static_cast<Eigen::Index>(k)) =
                decision_value(model.per_class[k], model.gamma, x.row(i));
    return out;
}

std::vector<int> predict_svm(const SvmModel& model, const std::vector<int>& classes,
                             const Eigen::MatrixXd& x) {
    const Eigen::MatrixXd decisions = svm_decisions(model, x);
    std::vector<int> out(static_cast<std::size_t>(x.rows()));
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        Eigen::Index arg = 0;
        decisions.row(i).maxCoeff(&arg);
        out[static_cast<std::size_t>(i)] = classes[static_cast<std::size_t>(arg)];
    }
    return out;
}

}  // namespace qsmote
