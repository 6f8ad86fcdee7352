#include <map>
#include <numeric>

#include "learn_internal.hpp"

namespace qsmote {

ForestModel fit_forest(const Eigen::MatrixXd& x, const std::vector<int>& y, std::uint64_t seed,
                       const ForestOptions& options) {
    const Eigen::Index n = x.rows();
    ForestModel forest;
    forest.trees.reserve(static_cast<std::size_t>(options.n_trees));

    for (int t = 0; t < options.n_trees; ++t) {
        Rng rng = make_rng(derive_seed(seed, 0x666f72657374ULL, static_cast<std::uint64_t>(t)));
        std::vector<Eigen::Index> indices;
        indices.reserve(static_cast<std::size_t>(n));
        if (options.bootstrap) {
            for (Eigen::Index i = 0; i < n; ++i)
                indices.push_back(
                    static_cast<Eigen::Index>(uniform_below(rng, static_cast<std::size_t>(n))));
        } else {
            indices.resize(static_cast<std::size_t>(n));
            std::iota(indices.begin(), indices.end(), Eigen::Index{0});
        }
        forest.trees.push_back(build_cart(x, y, indices, options.feature_subset, &rng));
    }
    return forest;
}

std::vector<int> predict_forest(const ForestModel& forest, const std::vector<int>& classes,
                                const Eigen::MatrixXd& x) {
    (void)classes;
    std::vector<int> out(static_cast<std::size_t>(x.rows()));
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        std::map<int, int> votes;
        for (const auto& tree : forest.trees) ++votes[predict_tree(tree, x.row(i))];
        int best = votes.begin()->first;
        int best_n = votes.begin()->second;
        for (const auto& [label, c] : votes) {
            if (c > best_n) {
                best = label;
                best_n = c;
            }
        }
        out[static_cast<std::size_t>(i)] = best;
    }
    return out;
}

}  // namespace qsmote
