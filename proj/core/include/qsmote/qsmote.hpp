#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "qsmote/dataset.hpp"
#include "qsmote/rng.hpp"

namespace qsmote {

// Oversampler knobs. shots == 0 selects the analytic angle; shots > 0 runs
// the sampled swap-test circuit with that many shots per synthesis.
struct OversampleConfig {
    std::set<int> minority_labels;
    int clusters = 4;
    double split_factor = 5.0;  // kappa
    int shots = 0;
    std::uint64_t seed = 42;
    bool clamp_to_centroid = false;
};

// Per-label class counts plus the majority count.
struct ClassCounts {
    std::map<int, Eigen::Index> per_label;
    Eigen::Index majority_count = 0;
};

ClassCounts count_classes(const std::vector<int>& y);

// need_l = majority_count - N_l for each minority label; zero-need labels
// are omitted. Throws UnknownLabel.
std::map<int, Eigen::Index> compute_needs(const ClassCounts& counts,
                                          const std::set<int>& minority_labels);

// One synthetic sample: step r ~ Uniform(0, angle / split_factor) along the
// unit direction from x toward the centroid (a random unit direction when
// they coincide). With clamp, r is capped at the distance to the centroid.
// Throws DimensionMismatch.
Eigen::VectorXd synthesize_one(const Eigen::VectorXd& x, const Eigen::VectorXd& centroid,
                               double angle, double split_factor, Rng& rng, bool clamp);

// One row of the synthesis trace, enough to re-verify every step against an
// independent oracle.
struct SynthesisRecord {
    int label = 0;
    Eigen::Index seed_row = 0;  // row index into the input matrix
    int cluster_id = 0;
    double angle = 0.0;
    double step = 0.0;
};

// Algorithm: fit k-means once on the full feature matrix; for every minority
// label draw seeds with replacement, measure the quantum-inspired angle to
// the seed's centroid, and append one synthetic per missing sample. Original
// rows are preserved bit-identical and synthetics follow them; afterwards
// every label counts exactly majority_count rows. Deterministic given
// (data, config); parallel and serial synthesis orders coincide because each
// synthesis draws from its own substream. Throws MinorityLabelEmpty.
LabeledDataset oversample(const LabeledDataset& data, const OversampleConfig& config,
                          std::vector<SynthesisRecord>* trace = nullptr);

}  // namespace qsmote
