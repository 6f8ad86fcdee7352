#include "qsmote/qsmote.hpp"

#include <cmath>
#include <numbers>

#include "qsmote/cluster.hpp"
#include "qsmote/errors.hpp"
#include "qsmote/swaptest.hpp"

namespace qsmote {

namespace {

constexpr double kDegenerateNorm = 1e-12;

// Quantum-inspired angle between a seed sample and its centroid. A point
// sitting on its centroid is perfectly aligned (angle 0, so the step is 0
// too); zero-norm vectors carry no direction information and are treated as
// orthogonal (angle pi/2) instead of raising. Standardized data makes both
// paths rare.
double angle_between(const Eigen::VectorXd& x, const Eigen::VectorXd& centroid, int shots,
                     Rng& rng) {
    if ((x - centroid).norm() < kDegenerateNorm) return 0.0;
    if (x.norm() < kDegenerateNorm || centroid.norm() < kDegenerateNorm)
        return std::numbers::pi / 2.0;
    if (shots > 0) return estimate_angle_sampled(centroid, x, shots, rng).angle;
    return overlap_analytic(centroid, x).angle;
}

Eigen::VectorXd random_unit_vector(Eigen::Index d, Rng& rng) {
    Eigen::VectorXd v(d);
    double norm2 = 0.0;
    do {
        for (Eigen::Index i = 0; i < d; ++i) v[i] = normal01(rng);
        norm2 = v.squaredNorm();
    } while (norm2 < kDegenerateNorm);
    return v / std::sqrt(norm2);
}

}  // namespace

ClassCounts count_classes(const std::vector<int>& y) {
    ClassCounts counts;
    for (int label : y) ++counts.per_label[label];
    for (const auto& [label, n] : counts.per_label)
        counts.majority_count = std::max(counts.majority_count, n);
    return counts;
}

std::map<int, Eigen::Index> compute_needs(const ClassCounts& counts,
                                          const std::set<int>& minority_labels) {
    std::map<int, Eigen::Index> needs;
    for (int label : minority_labels) {
        const auto it = counts.per_label.find(label);
        if (it == counts.per_label.end())
            throw UnknownLabel("minority label " + std::to_string(label) +
                               " is not present in the dataset");
        const Eigen::Index need = counts.majority_count - it->second;
        if (need > 0) needs[label] = need;
    }
    return needs;
}

Eigen::VectorXd synthesize_one(const Eigen::VectorXd& x, const Eigen::VectorXd& centroid,
                               double angle, double split_factor, Rng& rng, bool clamp) {
    if (x.size() != centroid.size())
        throw DimensionMismatch("sample dimension " + std::to_string(x.size()) +
                                " != centroid dimension " + std::to_string(centroid.size()));

    double r = uniform01(rng) * (angle / split_factor);

    const Eigen::VectorXd delta = centroid - x;
    const double dist = delta.norm();
    Eigen::VectorXd direction;
    if (dist > kDegenerateNorm)
        direction = delta / dist;
    else
        direction = random_unit_vector(x.size(), rng);

    if (clamp) r = std::min(r, dist);
    return x + r * direction;
}

LabeledDataset oversample(const LabeledDataset& data, const OversampleConfig& config,
                          std::vector<SynthesisRecord>* trace) {
    if (config.split_factor <= 0.0) throw ConfigError("split_factor must be positive");
    const ClassCounts counts = count_classes(data.y);
    const std::map<int, Eigen::Index> needs = compute_needs(counts, config.minority_labels);

    Eigen::Index total_new = 0;
    for (const auto& [label, need] : needs) total_new += need;

    LabeledDataset out;
    out.x.resize(data.n_rows() + total_new, data.n_features());
    out.x.topRows(data.n_rows()) = data.x;
    out.y = data.y;
    out.y.reserve(static_cast<std::size_t>(data.n_rows() + total_new));
    if (total_new == 0) return out;

    const KMeansModel kmeans = fit_kmeans(data.x, config.clusters, config.seed);

    Eigen::Index write_row = data.n_rows();
    for (const auto& [label, need] : needs) {
        std::vector<Eigen::Index> pool;
        for (Eigen::Index i = 0; i < data.n_rows(); ++i)
            if (data.y[static_cast<std::size_t>(i)] == label) pool.push_back(i);
        if (pool.empty())
            throw MinorityLabelEmpty("minority label " + std::to_string(label) +
                                     " has no samples");

        for (Eigen::Index s = 0; s < need; ++s) {
            // Independent substream per synthesis keeps parallel and serial
            // runs identical.
            Rng rng = make_rng(derive_seed(config.seed, static_cast<std::uint64_t>(label),
                                           static_cast<std::uint64_t>(s)));
            const Eigen::Index seed_row =
                pool[uniform_below(rng, pool.size())];
            const Eigen::VectorXd x = data.x.row(seed_row).transpose();
            const int cid = predict_cluster(kmeans, x);
            const Eigen::VectorXd centroid = kmeans.centroids.row(cid).transpose();
            const double angle = angle_between(x, centroid, config.shots, rng);

            out.x.row(write_row) =
                synthesize_one(x, centroid, angle, config.split_factor, rng,
                               config.clamp_to_centroid)
                    .transpose();
            out.y.push_back(label);
            if (trace)
                trace->push_back({label, seed_row, cid, angle,
                                  (out.x.row(write_row).transpose() - x).norm()});
            ++write_row;
        }
    }
    return out;
}

}  // namespace qsmote
