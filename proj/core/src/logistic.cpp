#include <algorithm>
#include <cmath>

#include "qsmote/errors.hpp"
#include "qsmote/learn.hpp"

namespace qsmote {

namespace {

// Row-wise softmax with max-subtraction.
Eigen::MatrixXd softmax(const Eigen::MatrixXd& scores) {
    Eigen::MatrixXd p = scores;
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
        const double m = p.row(i).maxCoeff();
        p.row(i) = (p.row(i).array() - m).exp();
        p.row(i) /= p.row(i).sum();
    }
    return p;
}

}  // namespace

double logistic_loss(const Eigen::MatrixXd& x, const std::vector<int>& y,
                     const std::vector<int>& classes, const Eigen::MatrixXd& weights,
                     const Eigen::VectorXd& bias, double c, Eigen::MatrixXd* grad_weights,
                     Eigen::VectorXd* grad_bias) {
    const Eigen::Index n = x.rows();
    const double lambda = 1.0 / (c * static_cast<double>(n));

    Eigen::MatrixXd scores = x * weights.transpose();
    scores.rowwise() += bias.transpose();
    const Eigen::MatrixXd probs = softmax(scores);

    double nll = 0.0;
    Eigen::MatrixXd delta = probs;  // becomes P - Y
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto cls = static_cast<Eigen::Index>(
            std::lower_bound(classes.begin(), classes.end(), y[static_cast<std::size_t>(i)]) -
            classes.begin());
        nll -= std::log(std::max(probs(i, cls), 1e-300));
        delta(i, cls) -= 1.0;
    }
    const double loss =
        nll / static_cast<double>(n) + 0.5 * lambda * weights.squaredNorm();

    if (grad_weights)
        *grad_weights = (delta.transpose() * x) / static_cast<double>(n) + lambda * weights;
    if (grad_bias) *grad_bias = delta.colwise().sum().transpose() / static_cast<double>(n);
    return loss;
}

// Batch gradient descent with backtracking step halving; the loss trace is
// strictly non-increasing by construction.
LogisticModel fit_logistic(const Eigen::MatrixXd& x, const std::vector<int>& y,
                           const std::vector<int>& classes, const LogisticOptions& options) {
    const auto k = static_cast<Eigen::Index>(classes.size());
    LogisticModel model;
    model.weights = Eigen::MatrixXd::Zero(k, x.cols());
    model.bias = Eigen::VectorXd::Zero(k);

    Eigen::MatrixXd grad_w;
    Eigen::VectorXd grad_b;
    double loss = logistic_loss(x, y, classes, model.weights, model.bias, options.c, &grad_w,
                                &grad_b);
    model.loss_trace.push_back(loss);

    double step = 1.0;
    for (int iter = 0; iter < options.max_iter; ++iter) {
        const double grad_norm = std::sqrt(grad_w.squaredNorm() + grad_b.squaredNorm());
        if (grad_norm < 1e-10) break;

        double next_loss = loss;
        Eigen::MatrixXd next_w;
        Eigen::VectorXd next_b;
        bool improved = false;
        for (int halvings = 0; halvings < 50; ++halvings) {
            next_w = model.weights - step * grad_w;
            next_b = model.bias - step * grad_b;
            next_loss =
                logistic_loss(x, y, classes, next_w, next_b, options.c, nullptr, nullptr);
            if (next_loss <= loss) {
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if (!improved) break;

        model.weights = next_w;
        model.bias = next_b;
        model.n_iter = iter + 1;
        model.loss_trace.push_back(next_loss);
        const double rel = (loss - next_loss) / std::max(std::abs(loss), 1e-12);
        loss = next_loss;
        logistic_loss(x, y, classes, model.weights, model.bias, options.c, &grad_w, &grad_b);
        step *= 2.0;  // optimistic growth, halved again on demand
        if (rel < options.tol) break;
    }
    return model;
}

std::vector<int> predict_logistic(const LogisticModel& model, const std::vector<int>& classes,
                                  const Eigen::MatrixXd& x) {
    Eigen::MatrixXd scores = x * model.weights.transpose();
    scores.rowwise() += model.bias.transpose();
    std::vector<int> out(static_cast<std::size_t>(x.rows()));
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        Eigen::Index arg = 0;
        scores.row(i).maxCoeff(&arg);
        out[static_cast<std::size_t>(i)] = classes[static_cast<std::size_t>(arg)];
    }
    return out;
}

}  // namespace qsmote
