#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace qsmote {

// ---------------------------------------------------------------------------
// Preprocessing
// ---------------------------------------------------------------------------

// Per-column standardization parameters. Variances use the population
// convention (divide by n); zero-variance columns get std 1 so they pass
// through centered only.
struct ScalerParams {
    Eigen::VectorXd means;
    Eigen::VectorXd stds;
};

ScalerParams fit_scaler(const Eigen::MatrixXd& x_train);
Eigen::MatrixXd transform(const ScalerParams& scaler, const Eigen::MatrixXd& x);
Eigen::MatrixXd inverse_transform(const ScalerParams& scaler, const Eigen::MatrixXd& x);

// Principal components of the centered covariance (divided by n-1), obtained
// from a dense symmetric eigendecomposition. Component rows are orthonormal,
// explained_variance is non-increasing, and component signs are fixed so the
// largest-magnitude coefficient of each row is positive.
struct PcaModel {
    Eigen::MatrixXd components;          // r x d
    Eigen::VectorXd explained_variance;  // length r
    Eigen::VectorXd mean;                // length d
};

PcaModel fit_pca(const Eigen::MatrixXd& x, int r);  // throws RankTooHigh, EmptyInput
Eigen::MatrixXd project(const PcaModel& pca, const Eigen::MatrixXd& x);

// ---------------------------------------------------------------------------
// Classifiers
// ---------------------------------------------------------------------------

enum class ModelKind { LR, RF, SVM, NB, DT };

inline constexpr ModelKind kAllModelKinds[] = {ModelKind::LR, ModelKind::RF, ModelKind::SVM,
                                               ModelKind::NB, ModelKind::DT};

std::string model_name(ModelKind kind);
ModelKind model_from_name(const std::string& name);  // throws ConfigError

// Multinomial (softmax) logistic regression with L2 penalty, trained by
// batch gradient descent with backtracking step halving.
struct LogisticModel {
    Eigen::MatrixXd weights;  // K x d
    Eigen::VectorXd bias;     // K
    std::vector<double> loss_trace;
    int n_iter = 0;
};

struct LogisticOptions {
    int max_iter = 500;
    double c = 1.0;     // inverse regularization strength
    double tol = 1e-7;  // relative loss improvement stop
};

// CART decision tree, Gini impurity, grown to purity.
struct TreeNode {
    int feature = -1;        // -1 marks a leaf
    double threshold = 0.0;  // go left when x[feature] <= threshold
    int left = -1;
    int right = -1;
    int label = -1;  // leaf prediction
};

struct DecisionTreeModel {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
    int n_features = 0;
};

enum class FeatureSubset { All, Sqrt };

struct ForestOptions {
    int n_trees = 200;
    bool bootstrap = true;
    FeatureSubset feature_subset = FeatureSubset::Sqrt;
};

struct ForestModel {
    std::vector<DecisionTreeModel> trees;
};

// One-vs-rest RBF-kernel SVM trained by SMO-style pairwise coordinate
// ascent. decision(x) for class k is sum_i alpha_i y_i K(sv_i, x) + b.
struct SvmBinary {
    Eigen::MatrixXd support_vectors;
    Eigen::VectorXd coeffs;  // alpha_i * y_i, so |coeff| = alpha in [0, C]
    double bias = 0.0;
    std::vector<double> dual_trace;  // dual objective after each optimization pass
};

struct SvmModel {
    std::vector<SvmBinary> per_class;  // one machine per class index
    double gamma = 0.0;
};

struct SvmOptions {
    double c = 1.0;
    double gamma = -1.0;  // <= 0 means "scale": 1 / (d * Var(X))
    double tol = 1e-3;
    int max_passes = 200;
};

// Gaussian naive Bayes with a variance floor of 1e-9 * max feature variance.
struct NaiveBayesModel {
    Eigen::MatrixXd means;      // K x d
    Eigen::MatrixXd variances;  // K x d
    Eigen::VectorXd log_priors;
};

struct TrainOptions {
    LogisticOptions logistic;
    ForestOptions forest;
    SvmOptions svm;
};

struct TrainedModel {
    ModelKind kind = ModelKind::DT;
    std::vector<int> classes;  // distinct labels seen in training, ascending
    std::uint64_t seed = 0;
    std::variant<LogisticModel, ForestModel, SvmModel, NaiveBayesModel, DecisionTreeModel> params;
};

// Fits one of the five classifiers. Labels may be any integers; predictions
// only ever emit labels seen in training. Throws SingleClass, EmptyInput,
// DimensionMismatch.
TrainedModel train(ModelKind kind, const Eigen::MatrixXd& x, const std::vector<int>& y,
                   std::uint64_t seed, const TrainOptions& options = {});

std::vector<int> predict(const TrainedModel& model, const Eigen::MatrixXd& x);

// Per-class decision values (n x K); used by tests probing SVM symmetry.
Eigen::MatrixXd svm_decision_values(const TrainedModel& model, const Eigen::MatrixXd& x);

// Loss and gradient of the regularized multinomial objective at the given
// parameters; exposed so tests can check the gradient against finite
// differences. Gradient layout matches [weights (K x d), bias (K)].
double logistic_loss(const Eigen::MatrixXd& x, const std::vector<int>& y,
                     const std::vector<int>& classes, const Eigen::MatrixXd& weights,
                     const Eigen::VectorXd& bias, double c, Eigen::MatrixXd* grad_weights,
                     Eigen::VectorXd* grad_bias);

}  // namespace qsmote
