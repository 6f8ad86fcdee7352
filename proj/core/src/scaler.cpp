#include <cmath>

#include "qsmote/errors.hpp"
#include "qsmote/learn.hpp"

namespace qsmote {

ScalerParams fit_scaler(const Eigen::MatrixXd& x_train) {
    if (x_train.rows() == 0 || x_train.cols() == 0)
        throw EmptyInput("cannot fit a scaler on an empty matrix");

    const double n = static_cast<double>(x_train.rows());
    ScalerParams scaler;
    scaler.means = x_train.colwise().mean();
    scaler.stds.resize(x_train.cols());
    for (Eigen::Index j = 0; j < x_train.cols(); ++j) {
        const double var = (x_train.col(j).array() - scaler.means[j]).square().sum() / n;
        const double sd = std::sqrt(var);
        scaler.stds[j] = sd > 0.0 ? sd : 1.0;
    }
    return scaler;
}

Eigen::MatrixXd transform(const ScalerParams& scaler, const Eigen::MatrixXd& x) {
    if (x.cols() != scaler.means.size())
        throw DimensionMismatch("scaler fitted on " + std::to_string(scaler.means.size()) +
                                " features, got " + std::to_string(x.cols()));
    Eigen::MatrixXd out = x;
    out.rowwise() -= scaler.means.transpose();
    out.array().rowwise() /= scaler.stds.transpose().array();
    return out;
}

Eigen::MatrixXd inverse_transform(const ScalerParams& scaler, const Eigen::MatrixXd& x) {
    if (x.cols() != scaler.means.size())
        throw DimensionMismatch("scaler fitted on " + std::to_string(scaler.means.size()) +
                                " features, got " + std::to_string(x.cols()));
    Eigen::MatrixXd out = x;
    out.array().rowwise() *= scaler.stds.transpose().array();
    out.rowwise() += scaler.means.transpose();
    return out;
}

}  // namespace qsmote
