#include "qsmote/dataset.hpp"

#include <algorithm>

namespace qsmote {

int LabeledDataset::n_classes() const {
    int max_label = -1;
    for (int label : y) max_label = std::max(max_label, label);
    return max_label + 1;
}

std::map<int, Eigen::Index> class_counts(const std::vector<int>& y) {
    std::map<int, Eigen::Index> counts;
    for (int label : y) ++counts[label];
    return counts;
}

}  // namespace qsmote
