#include <cmath>

#include "qsmote/errors.hpp"
#include "qsmote/learn.hpp"

namespace qsmote {

PcaModel fit_pca(const Eigen::MatrixXd& x, int r) {
    const Eigen::Index n = x.rows();
    const Eigen::Index d = x.cols();
    if (n == 0 || d == 0) throw EmptyInput("cannot fit PCA on an empty matrix");
    if (r < 1 || r > std::min(n, d))
        throw RankTooHigh("requested " + std::to_string(r) + " components from a " +
                          std::to_string(n) + "x" + std::to_string(d) + " matrix");

    PcaModel pca;
    pca.mean = x.colwise().mean();
    Eigen::MatrixXd centered = x.rowwise() - pca.mean.transpose();
    const double denom = n > 1 ? static_cast<double>(n - 1) : 1.0;
    Eigen::MatrixXd cov = (centered.transpose() * centered) / denom;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success) throw InternalError("PCA eigendecomposition failed");

    // Eigen returns ascending eigenvalues; keep the top r in descending order.
    pca.components.resize(r, d);
    pca.explained_variance.resize(r);
    for (int i = 0; i < r; ++i) {
        const Eigen::Index src = d - 1 - i;
        pca.explained_variance[i] = std::max(0.0, solver.eigenvalues()[src]);
        Eigen::VectorXd comp = solver.eigenvectors().col(src);
        // Deterministic sign: largest-magnitude coefficient positive.
        Eigen::Index arg = 0;
        comp.cwiseAbs().maxCoeff(&arg);
        if (comp[arg] < 0.0) comp = -comp;
        pca.components.row(i) = comp.transpose();
    }
    return pca;
}

Eigen::MatrixXd project(const PcaModel& pca, const Eigen::MatrixXd& x) {
    if (x.cols() != pca.mean.size())
        throw DimensionMismatch("PCA fitted on " + std::to_string(pca.mean.size()) +
                                " features, got " + std::to_string(x.cols()));
    return (x.rowwise() - pca.mean.transpose()) * pca.components.transpose();
}

}  // namespace qsmote
