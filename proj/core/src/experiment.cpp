#include <algorithm>
#include <cmath>

#include "qsmote/errors.hpp"
#include "qsmote/eval.hpp"

namespace qsmote {

namespace {

bool uses_scaled_features(ModelKind kind) {
    // LR, SVM and NB fit on standardized inputs; the tree models consume the
    // unscaled tabular features.
    return kind == ModelKind::LR || kind == ModelKind::SVM || kind == ModelKind::NB;
}

// One (channel, probability) evaluation cell; nullopt channel = clean.
struct Cell {
    std::optional<ChannelKind> channel;
    double probability = 0.0;
};

std::set<int> auto_minority(const std::vector<int>& y) {
    const ClassCounts counts = count_classes(y);
    std::set<int> minority;
    for (const auto& [label, n] : counts.per_label)
        if (n < counts.majority_count) minority.insert(label);
    return minority;
}

struct TrainedSet {
    std::map<ModelKind, TrainedModel> by_kind;
};

// Fits every configured model for one (fold, phase, training matrix) cell.
TrainedSet train_models(const ExperimentConfig& config, Phase phase,
                        const Eigen::MatrixXd& train_base, const std::vector<int>& y_train,
                        const ScalerParams& scaler, std::vector<SynthesisRecord>* trace) {
    Eigen::MatrixXd scaled = transform(scaler, train_base);
    Eigen::MatrixXd unscaled = train_base;
    std::vector<int> y_use = y_train;

    if (phase == Phase::After) {
        OversampleConfig qs = config.qsmote;
        if (qs.minority_labels.empty()) qs.minority_labels = auto_minority(y_train);
        // QSMOTE operates in the standardized space; tree models get the
        // synthetics mapped back through the scaler.
        const LabeledDataset balanced = oversample({scaled, y_train}, qs, trace);
        scaled = balanced.x;
        unscaled = inverse_transform(scaler, balanced.x);
        y_use = balanced.y;
    }

    TrainedSet trained;
    for (ModelKind kind : config.models)
        trained.by_kind.emplace(kind, train(kind, uses_scaled_features(kind) ? scaled : unscaled,
                                            y_use, config.seed, config.train_options));
    return trained;
}

double mean_of(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double std_of(const std::vector<double>& v, double mean) {
    double s = 0.0;
    for (double x : v) s += (x - mean) * (x - mean);
    return std::sqrt(s / static_cast<double>(v.size()));  // population convention
}

}  // namespace

std::string phase_name(Phase phase) { return phase == Phase::Before ? "before" : "after"; }

FoldArtifacts prepare_fold(const LabeledDataset& data, const FoldPlan& plan, int fold,
                           const ExperimentConfig& config) {
    std::vector<Eigen::Index> train_rows;
    std::vector<Eigen::Index> test_rows;
    for (std::size_t i = 0; i < plan.assignments.size(); ++i) {
        if (plan.assignments[i] == fold)
            test_rows.push_back(static_cast<Eigen::Index>(i));
        else
            train_rows.push_back(static_cast<Eigen::Index>(i));
    }

    Eigen::MatrixXd train_raw(static_cast<Eigen::Index>(train_rows.size()), data.n_features());
    Eigen::MatrixXd test_raw(static_cast<Eigen::Index>(test_rows.size()), data.n_features());
    FoldArtifacts art;
    for (std::size_t i = 0; i < train_rows.size(); ++i) {
        train_raw.row(static_cast<Eigen::Index>(i)) = data.x.row(train_rows[i]);
        art.y_train.push_back(data.y[static_cast<std::size_t>(train_rows[i])]);
    }
    for (std::size_t i = 0; i < test_rows.size(); ++i) {
        test_raw.row(static_cast<Eigen::Index>(i)) = data.x.row(test_rows[i]);
        art.y_test.push_back(data.y[static_cast<std::size_t>(test_rows[i])]);
    }

    if (config.pca_components > 0) {
        art.pca = fit_pca(train_raw, config.pca_components);
        art.train_base = project(*art.pca, train_raw);
        art.test_base = project(*art.pca, test_raw);
    } else {
        art.train_base = std::move(train_raw);
        art.test_base = std::move(test_raw);
    }

    art.scaler = fit_scaler(art.train_base);
    art.bounds = compute_bounds(art.train_base);
    return art;
}

ExperimentResult run_experiment(const LabeledDataset& data, const ExperimentConfig& config) {
    std::vector<Phase> phases;
    if (config.run_before) phases.push_back(Phase::Before);
    if (config.run_after) phases.push_back(Phase::After);
    if (phases.empty()) throw ConfigError("at least one of the before/after phases must run");

    // The non-default whole-dataset mode oversamples once up front; the
    // synthetic rows then take part in the fold split itself.
    LabeledDataset augmented;
    const bool pre_augment = config.run_after && !config.qsmote_fold_internal;
    if (pre_augment) {
        OversampleConfig qs = config.qsmote;
        if (qs.minority_labels.empty()) qs.minority_labels = auto_minority(data.y);
        const ScalerParams scaler = fit_scaler(data.x);
        LabeledDataset balanced = oversample({transform(scaler, data.x), data.y}, qs, nullptr);
        augmented.x = inverse_transform(scaler, balanced.x);
        augmented.y = std::move(balanced.y);
    }

    const FoldPlan plan = stratified_kfold(data.y, config.folds, config.seed);
    const FoldPlan plan_after =
        pre_augment ? stratified_kfold(augmented.y, config.folds, config.seed) : plan;

    std::vector<Cell> cells;
    cells.push_back({std::nullopt, 0.0});
    for (ChannelKind kind : config.grid.channels)
        for (double p : config.grid.probabilities) cells.push_back({kind, p});

    const int n_classes = data.n_classes();
    ExperimentResult result;

    for (int fold = 0; fold < config.folds; ++fold) {
        for (Phase phase : phases) {
            const bool use_augmented = pre_augment && phase == Phase::After;
            const LabeledDataset& fold_data = use_augmented ? augmented : data;
            const FoldPlan& fold_plan = use_augmented ? plan_after : plan;

            const ExperimentConfig& fold_config = config;
            const FoldArtifacts art = prepare_fold(fold_data, fold_plan, fold, fold_config);
            const Phase train_phase = use_augmented ? Phase::Before : phase;
            TrainedSet trained = train_models(fold_config, train_phase, art.train_base,
                                              art.y_train, art.scaler, nullptr);

            for (const Cell& cell : cells) {
                Eigen::MatrixXd test_mtx = art.test_base;
                TrainedSet* models = &trained;
                TrainedSet retrained;
                ScalerParams cell_scaler = art.scaler;
                if (cell.channel) {
                    const NoiseChannel channel = make_channel(*cell.channel, cell.probability);
                    test_mtx = corrupt_features(art.test_base, channel, art.bounds);
                    if (config.corrupt_train && channel.p > 0.0) {
                        const Eigen::MatrixXd noisy_train =
                            corrupt_features(art.train_base, channel, art.bounds);
                        cell_scaler = fit_scaler(noisy_train);
                        retrained = train_models(fold_config, train_phase, noisy_train,
                                                 art.y_train, cell_scaler, nullptr);
                        models = &retrained;
                    }
                }
                const Eigen::MatrixXd scaled_test = transform(cell_scaler, test_mtx);
                for (ModelKind kind : config.models) {
                    const std::vector<int> y_pred =
                        predict(models->by_kind.at(kind),
                                uses_scaled_features(kind) ? scaled_test : test_mtx);
                    result.rows.push_back({kind, phase, cell.channel, cell.probability, fold,
                                           compute_metrics(art.y_test, y_pred, n_classes)});
                }
            }
        }
    }

    // Deterministic row order: fold, model (config order), phase, cell.
    auto model_pos = [&](ModelKind kind) {
        return std::find(config.models.begin(), config.models.end(), kind) -
               config.models.begin();
    };
    auto cell_pos = [&](const ResultRow& row) -> std::size_t {
        if (!row.channel) return 0;
        for (std::size_t i = 1; i < cells.size(); ++i)
            if (cells[i].channel == row.channel && cells[i].probability == row.probability)
                return i;
        return cells.size();
    };
    std::stable_sort(result.rows.begin(), result.rows.end(),
                     [&](const ResultRow& a, const ResultRow& b) {
                         if (a.fold != b.fold) return a.fold < b.fold;
                         if (model_pos(a.model) != model_pos(b.model))
                             return model_pos(a.model) < model_pos(b.model);
                         if (a.phase != b.phase) return a.phase < b.phase;
                         return cell_pos(a) < cell_pos(b);
                     });

    // Aggregates in (model, phase, cell) order.
    for (ModelKind kind : config.models) {
        for (Phase phase : phases) {
            for (const Cell& cell : cells) {
                std::vector<double> acc;
                std::vector<double> prec;
                std::vector<double> rec;
                std::vector<double> f1;
                for (const ResultRow& row : result.rows) {
                    if (row.model != kind || row.phase != phase || row.channel != cell.channel ||
                        row.probability != cell.probability)
                        continue;
                    acc.push_back(row.metrics.accuracy);
                    prec.push_back(row.metrics.precision_weighted);
                    rec.push_back(row.metrics.recall_weighted);
                    f1.push_back(row.metrics.f1_weighted);
                }
                if (acc.empty()) continue;
                AggregateRow agg;
                agg.model = kind;
                agg.phase = phase;
                agg.channel = cell.channel;
                agg.probability = cell.probability;
                agg.accuracy_mean = mean_of(acc);
                agg.accuracy_std = std_of(acc, agg.accuracy_mean);
                agg.precision_mean = mean_of(prec);
                agg.precision_std = std_of(prec, agg.precision_mean);
                agg.recall_mean = mean_of(rec);
                agg.recall_std = std_of(rec, agg.recall_mean);
                agg.f1_mean = mean_of(f1);
                agg.f1_std = std_of(f1, agg.f1_mean);
                result.aggregates.push_back(agg);
            }
        }
    }
    return result;
}

}  // namespace qsmote
