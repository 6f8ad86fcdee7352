#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsmote/channels.hpp"
#include "qsmote/dataset.hpp"
#include "qsmote/learn.hpp"
#include "qsmote/qsmote.hpp"

namespace qsmote {

// Stratified fold assignment: within each class, samples are shuffled by the
// seed and dealt round-robin, so per-class fold counts differ by at most 1.
struct FoldPlan {
    int k = 0;
    std::vector<int> assignments;
    std::uint64_t seed = 0;
};

// Throws ClassTooSmall when any class has fewer than k samples.
FoldPlan stratified_kfold(const std::vector<int>& y, int k, std::uint64_t seed);

// Accuracy plus support-weighted precision/recall/F1 with the zero-division
// convention: undefined per-class ratios contribute 0.
struct MetricsReport {
    double accuracy = 0.0;
    double precision_weighted = 0.0;
    double recall_weighted = 0.0;
    double f1_weighted = 0.0;
    std::vector<Eigen::Index> support;  // per-class true counts
};

// Throws LengthMismatch.
MetricsReport compute_metrics(const std::vector<int>& y_true, const std::vector<int>& y_pred,
                              int n_classes);

enum class Phase { Before, After };
std::string phase_name(Phase phase);

struct NoiseGrid {
    std::vector<ChannelKind> channels;
    std::vector<double> probabilities;

    std::size_t size() const { return channels.size() * probabilities.size(); }
};

struct ExperimentConfig {
    std::vector<ModelKind> models{ModelKind::LR, ModelKind::RF, ModelKind::SVM, ModelKind::NB,
                                  ModelKind::DT};
    int folds = 5;
    std::uint64_t seed = 42;
    int pca_components = 0;  // 0 disables PCA
    bool run_before = true;
    bool run_after = true;
    OversampleConfig qsmote;      // minority_labels empty => auto (every non-majority label)
    bool qsmote_fold_internal = true;  // false: oversample once before splitting
    NoiseGrid grid;               // may be empty (clean evaluation only)
    bool corrupt_train = false;   // default corrupts the test split only
    TrainOptions train_options;
};

struct ResultRow {
    ModelKind model;
    Phase phase;
    std::optional<ChannelKind> channel;  // nullopt for the clean evaluation
    double probability = 0.0;
    int fold = 0;
    MetricsReport metrics;
};

struct AggregateRow {
    ModelKind model;
    Phase phase;
    std::optional<ChannelKind> channel;
    double probability = 0.0;
    double accuracy_mean = 0.0, accuracy_std = 0.0;
    double precision_mean = 0.0, precision_std = 0.0;
    double recall_mean = 0.0, recall_std = 0.0;
    double f1_mean = 0.0, f1_std = 0.0;
};

struct ExperimentResult {
    std::vector<ResultRow> rows;
    std::vector<AggregateRow> aggregates;
};

// Everything fitted on one training split; exposed so tests can assert that
// nothing here depends on the test rows.
struct FoldArtifacts {
    std::optional<PcaModel> pca;
    ScalerParams scaler;
    FeatureBounds bounds;
    Eigen::MatrixXd train_base;  // post-PCA, pre-scaling training features
    Eigen::MatrixXd test_base;
    std::vector<int> y_train;
    std::vector<int> y_test;
};

FoldArtifacts prepare_fold(const LabeledDataset& data, const FoldPlan& plan, int fold,
                           const ExperimentConfig& config);

// Cross-validated before/after-QSMOTE evaluation over the noise grid. Per
// fold, scaler/PCA/bounds/QSMOTE all derive from the training split only;
// the clean evaluation is always present and a grid cell with p == 0 equals
// it bit-exactly. Rows are ordered by (fold, model, phase, cell) and
// aggregates recompute to the row means.
ExperimentResult run_experiment(const LabeledDataset& data, const ExperimentConfig& config);

}  // namespace qsmote
