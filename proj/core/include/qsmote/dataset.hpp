#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

namespace qsmote {

// Feature matrix (one row per sample) plus integer labels in 0..K-1.
struct LabeledDataset {
    Eigen::MatrixXd x;
    std::vector<int> y;

    Eigen::Index n_rows() const { return x.rows(); }
    Eigen::Index n_features() const { return x.cols(); }
    int n_classes() const;
};

// label -> count over y.
std::map<int, Eigen::Index> class_counts(const std::vector<int>& y);

}  // namespace qsmote
