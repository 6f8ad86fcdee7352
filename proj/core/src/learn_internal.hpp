#pragma once

// Shared declarations between the per-classifier translation units and the
// train/predict dispatch in models.cpp. Not installed.

#include <vector>

#include <Eigen/Dense>

#include "qsmote/learn.hpp"
#include "qsmote/rng.hpp"

namespace qsmote {

LogisticModel fit_logistic(const Eigen::MatrixXd& x, const std::vector<int>& y,
                           const std::vector<int>& classes, const LogisticOptions& options);
std::vector<int> predict_logistic(const LogisticModel& model, const std::vector<int>& classes,
                                  const Eigen::MatrixXd& x);

// Builds one CART tree over the given sample indices. rng is only consulted
// when subset == Sqrt (per-node feature draw); pass nullptr with All.
DecisionTreeModel build_cart(const Eigen::MatrixXd& x, const std::vector<int>& y,
                             const std::vector<Eigen::Index>& indices, FeatureSubset subset,
                             Rng* rng);
int predict_tree(const DecisionTreeModel& tree, const Eigen::RowVectorXd& row);

ForestModel fit_forest(const Eigen::MatrixXd& x, const std::vector<int>& y, std::uint64_t seed,
                       const ForestOptions& options);
std::vector<int> predict_forest(const ForestModel& forest, const std::vector<int>& classes,
                                const Eigen::MatrixXd& x);

SvmModel fit_svm(const Eigen::MatrixXd& x, const std::vector<int>& y,
                 const std::vector<int>& classes, const SvmOptions& options);
std::vector<int> predict_svm(const SvmModel& model, const std::vector<int>& classes,
                             const Eigen::MatrixXd& x);
Eigen::MatrixXd svm_decisions(const SvmModel& model, const Eigen::MatrixXd& x);

NaiveBayesModel fit_naive_bayes(const Eigen::MatrixXd& x, const std::vector<int>& y,
                                const std::vector<int>& classes);
std::vector<int> predict_naive_bayes(const NaiveBayesModel& model,
                                     const std::vector<int>& classes, const Eigen::MatrixXd& x);

}  // namespace qsmote
