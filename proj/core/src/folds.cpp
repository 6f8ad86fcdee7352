#include <map>

#include "qsmote/errors.hpp"
#include "qsmote/eval.hpp"
#include "qsmote/rng.hpp"

namespace qsmote {

FoldPlan stratified_kfold(const std::vector<int>& y, int k, std::uint64_t seed) {
    if (k < 2) throw ConfigError("stratified k-fold requires k >= 2");

    std::map<int, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < y.size(); ++i) by_class[y[i]].push_back(i);

    for (const auto& [label, members] : by_class)
        if (members.size() < static_cast<std::size_t>(k))
            throw ClassTooSmall("class " + std::to_string(label) + " has " +
                                std::to_string(members.size()) + " samples, fewer than k=" +
                                std::to_string(k));

    FoldPlan plan;
    plan.k = k;
    plan.seed = seed;
    plan.assignments.assign(y.size(), 0);
    for (auto& [label, members] : by_class) {
        Rng rng = make_rng(derive_seed(seed, 0x666f6c64ULL, static_cast<std::uint64_t>(label)));
        shuffle_vec(members, rng);
        for (std::size_t j = 0; j < members.size(); ++j)
            plan.assignments[members[j]] = static_cast<int>(j % static_cast<std::size_t>(k));
    }
    return plan;
}

}  // namespace qsmote
