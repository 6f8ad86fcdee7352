#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "learn_internal.hpp"

namespace qsmote {

namespace {

struct SplitChoice {
    bool found = false;
    int feature = -1;
    double threshold = 0.0;
    double impurity = 0.0;  // weighted child Gini
};

double gini_from_counts(const std::map<int, Eigen::Index>& counts, Eigen::Index total) {
    double g = 1.0;
    for (const auto& [label, c] : counts) {
        const double f = static_cast<double>(c) / static_cast<double>(total);
        g -= f * f;
    }
    return g;
}

int majority_label(const std::map<int, Eigen::Index>& counts) {
    int best = counts.begin()->first;
    Eigen::Index best_n = counts.begin()->second;
    for (const auto& [label, c] : counts) {
        if (c > best_n) {  // ties keep the smallest label (map is ordered)
            best = label;
            best_n = c;
        }
    }
    return best;
}

// Exhaustive best-Gini split over one feature; thresholds are midpoints of
// adjacent distinct values. Zero-gain splits are admissible (XOR-style data
// needs them); recursion still terminates because both children are smaller.
void scan_feature(const Eigen::MatrixXd& x, const std::vector<int>& y,
                  const std::vector<Eigen::Index>& indices, int feature, SplitChoice& best) {
    std::vector<Eigen::Index> order = indices;
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        if (x(a, feature) != x(b, feature)) return x(a, feature) < x(b, feature);
        return a < b;
    });

    const auto total = static_cast<Eigen::Index>(order.size());
    std::map<int, Eigen::Index> left_counts;
    std::map<int, Eigen::Index> right_counts;
    for (Eigen::Index i : order) ++right_counts[y[static_cast<std::size_t>(i)]];

    for (Eigen::Index pos = 0; pos + 1 < total; ++pos) {
        const int label = y[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])];
        ++left_counts[label];
        auto it = right_counts.find(label);
        if (--(it->second) == 0) right_counts.erase(it);

        const double v = x(order[static_cast<std::size_t>(pos)], feature);
        const double v_next = x(order[static_cast<std::size_t>(pos + 1)], feature);
        if (v == v_next) continue;

        const Eigen::Index n_left = pos + 1;
        const Eigen::Index n_right = total - n_left;
        const double weighted =
            (static_cast<double>(n_left) * gini_from_counts(left_counts, n_left) +
             static_cast<double>(n_right) * gini_from_counts(right_counts, n_right)) /
            static_cast<double>(total);
        if (!best.found || weighted < best.impurity) {
            best.found = true;
            best.feature = feature;
            best.threshold = v + 0.5 * (v_next - v);
            best.impurity = weighted;
        }
    }
}

int grow(const Eigen::MatrixXd& x, const std::vector<int>& y,
         std::vector<Eigen::Index>&& indices, FeatureSubset subset, Rng* rng,
         std::vector<TreeNode>& nodes) {
    std::map<int, Eigen::Index> counts;
    for (Eigen::Index i : indices) ++counts[y[static_cast<std::size_t>(i)]];

    const int node_id = static_cast<int>(nodes.size());
    nodes.emplace_back();

    const auto total = static_cast<Eigen::Index>(indices.size());
    if (counts.size() == 1 || total < 2) {
        nodes[static_cast<std::size_t>(node_id)].label = majority_label(counts);
        return node_id;
    }

    std::vector<int> features(static_cast<std::size_t>(x.cols()));
    std::iota(features.begin(), features.end(), 0);
    if (subset == FeatureSubset::Sqrt && rng != nullptr) {
        const auto m = static_cast<std::size_t>(std::max(
            1, static_cast<int>(std::sqrt(static_cast<double>(x.cols())))));
        // Partial Fisher-Yates, then restore index order so tie-breaking
        // stays by lowest feature index.
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t j = i + uniform_below(*rng, features.size() - i);
            std::swap(features[i], features[j]);
        }
        features.resize(m);
        std::sort(features.begin(), features.end());
    }

    SplitChoice best;
    for (int f : features) scan_feature(x, y, indices, f, best);

    if (!best.found) {
        // No split improves impurity (e.g. identical rows with mixed labels).
        nodes[static_cast<std::size_t>(node_id)].label = majority_label(counts);
        return node_id;
    }

    std::vector<Eigen::Index> left_idx;
    std::vector<Eigen::Index> right_idx;
    for (Eigen::Index i : indices) {
        if (x(i, best.feature) <= best.threshold)
            left_idx.push_back(i);
        else
            right_idx.push_back(i);
    }
    indices.clear();

    const int left = grow(x, y, std::move(left_idx), subset, rng, nodes);
    const int right = grow(x, y, std::move(right_idx), subset, rng, nodes);
    TreeNode& node = nodes[static_cast<std::size_t>(node_id)];
    node.feature = best.feature;
    node.threshold = best.threshold;
    node.left = left;
    node.right = right;
    return node_id;
}

}  // namespace

DecisionTreeModel build_cart(const Eigen::MatrixXd& x, const std::vector<int>& y,
                             const std::vector<Eigen::Index>& indices, FeatureSubset subset,
                             Rng* rng) {
    DecisionTreeModel tree;
    tree.n_features = static_cast<int>(x.cols());
    std::vector<Eigen::Index> idx = indices;
    grow(x, y, std::move(idx), subset, rng, tree.nodes);
    return tree;
}

int predict_tree(const DecisionTreeModel& tree, const Eigen::RowVectorXd& row) {
    int node = 0;
    while (tree.nodes[static_cast<std::size_t>(node)].feature >= 0) {
        const TreeNode& n = tree.nodes[static_cast<std::size_t>(node)];
        node = row[n.feature] <= n.threshold ? n.left : n.right;
    }
    return tree.nodes[static_cast<std::size_t>(node)].label;
}

}  // namespace qsmote
