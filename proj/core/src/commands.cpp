#include "qsmote/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "qsmote/csv.hpp"
#include "qsmote/errors.hpp"
#include "qsmote/eval.hpp"

namespace qsmote {

namespace {

namespace fs = std::filesystem;

// Fixed 6-significant-digit formatting keeps every output file
// byte-deterministic.
std::string g6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

fs::path prepare_output_dir(const RunConfig& config) {
    fs::path dir(config.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw UnwritableOutput("cannot create output directory '" + config.output_dir + "'");
    return dir;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw UnwritableOutput("cannot write '" + path.string() + "'");
    return out;
}

void validate_common(const RunConfig& config) {
    if (config.dataset_path.empty()) throw ConfigError("no dataset path given");
    if (config.split_factor <= 0.0) throw ConfigError("split_factor must be positive");
    if (config.clusters < 1) throw ConfigError("clusters must be at least 1");
    if (config.shots < 0) throw ConfigError("shots must be non-negative");
    if (config.pca_components < 0) throw ConfigError("pca components must be non-negative");
    for (double p : config.probabilities)
        if (!(p >= 0.0 && p <= 1.0))
            throw ConfigError("noise probabilities must lie in [0, 1], got " + g6(p));
    if (!(config.holdout >= 0.0 && config.holdout < 1.0))
        throw ConfigError("holdout fraction must lie in [0, 1)");
}

std::set<int> resolve_minority(const RunConfig& config, const LoadedCsv& csv) {
    std::set<int> minority;
    for (const auto& name : config.minority_labels) {
        const auto it = std::find(csv.label_names.begin(), csv.label_names.end(), name);
        if (it == csv.label_names.end())
            throw ConfigError("minority label '" + name + "' does not occur in the dataset");
        minority.insert(static_cast<int>(it - csv.label_names.begin()));
    }
    return minority;  // empty = auto
}

OversampleConfig qsmote_config(const RunConfig& config, const LoadedCsv& csv) {
    OversampleConfig qs;
    qs.minority_labels = resolve_minority(config, csv);
    qs.clusters = config.clusters;
    qs.split_factor = config.split_factor;
    qs.shots = config.shots;
    qs.seed = config.seed;
    qs.clamp_to_centroid = config.clamp;
    return qs;
}

ExperimentConfig experiment_config(const RunConfig& config, const LoadedCsv& csv) {
    ExperimentConfig exp;
    exp.models.clear();
    for (const auto& name : config.models) exp.models.push_back(model_from_name(name));
    if (exp.models.empty()) throw ConfigError("no models selected");
    exp.folds = config.folds;
    exp.seed = config.seed;
    exp.pca_components = config.pca_components;
    exp.qsmote = qsmote_config(config, csv);
    exp.qsmote_fold_internal = config.fold_internal;
    exp.corrupt_train = config.corrupt_train;
    for (const auto& name : config.channels)
        exp.grid.channels.push_back(channel_from_name(name));
    exp.grid.probabilities = config.probabilities;
    if (!exp.grid.channels.empty() && exp.grid.probabilities.empty())
        throw ConfigError("noise channels given without probabilities");
    return exp;
}

std::string channel_token(const std::optional<ChannelKind>& channel) {
    return channel ? channel_name(*channel) : "none";
}

void write_metrics_csv(const fs::path& dir, const ExperimentResult& result) {
    std::ofstream out = open_output(dir / "metrics.csv");
    out << "model,phase,channel,probability,fold,accuracy,precision,recall,f1\n";
    for (const auto& row : result.rows) {
        out << model_name(row.model) << ',' << phase_name(row.phase) << ','
            << channel_token(row.channel) << ',' << g6(row.probability) << ',' << row.fold << ','
            << g6(row.metrics.accuracy) << ',' << g6(row.metrics.precision_weighted) << ','
            << g6(row.metrics.recall_weighted) << ',' << g6(row.metrics.f1_weighted) << '\n';
    }
}

void write_aggregates_csv(const fs::path& dir, const ExperimentResult& result) {
    std::ofstream out = open_output(dir / "aggregates.csv");
    out << "model,phase,channel,probability,accuracy_mean,accuracy_std,precision_mean,"
           "precision_std,recall_mean,recall_std,f1_mean,f1_std\n";
    for (const auto& agg : result.aggregates) {
        out << model_name(agg.model) << ',' << phase_name(agg.phase) << ','
            << channel_token(agg.channel) << ',' << g6(agg.probability) << ','
            << g6(agg.accuracy_mean) << ',' << g6(agg.accuracy_std) << ','
            << g6(agg.precision_mean) << ',' << g6(agg.precision_std) << ','
            << g6(agg.recall_mean) << ',' << g6(agg.recall_std) << ',' << g6(agg.f1_mean) << ','
            << g6(agg.f1_std) << '\n';
    }
}

// Stratified holdout split: per class, shuffled rows, first slice held out.
void split_holdout(const LabeledDataset& data, double fraction, std::uint64_t seed,
                   LabeledDataset& cv_part, LabeledDataset& held_part) {
    std::map<int, std::vector<Eigen::Index>> by_class;
    for (Eigen::Index i = 0; i < data.n_rows(); ++i)
        by_class[data.y[static_cast<std::size_t>(i)]].push_back(i);

    std::vector<Eigen::Index> hold_rows;
    std::vector<Eigen::Index> cv_rows;
    for (auto& [label, members] : by_class) {
        Rng rng = make_rng(derive_seed(seed, 0x686f6c64ULL, static_cast<std::uint64_t>(label)));
        shuffle_vec(members, rng);
        const auto n_hold = static_cast<std::size_t>(fraction * static_cast<double>(members.size()));
        for (std::size_t j = 0; j < members.size(); ++j)
            (j < n_hold ? hold_rows : cv_rows).push_back(members[j]);
    }
    std::sort(hold_rows.begin(), hold_rows.end());
    std::sort(cv_rows.begin(), cv_rows.end());

    auto take = [&](const std::vector<Eigen::Index>& rows, LabeledDataset& out) {
        out.x.resize(static_cast<Eigen::Index>(rows.size()), data.n_features());
        out.y.clear();
        for (std::size_t j = 0; j < rows.size(); ++j) {
            out.x.row(static_cast<Eigen::Index>(j)) = data.x.row(rows[j]);
            out.y.push_back(data.y[static_cast<std::size_t>(rows[j])]);
        }
    };
    take(cv_rows, cv_part);
    take(hold_rows, held_part);
}

// Fits on the full CV portion and scores the held-out rows; mirrors one
// fold of run_experiment without the noise grid.
void write_holdout_csv(const fs::path& dir, const LabeledDataset& cv_part,
                       const LabeledDataset& held, const ExperimentConfig& exp) {
    std::optional<PcaModel> pca;
    Eigen::MatrixXd train_base = cv_part.x;
    Eigen::MatrixXd test_base = held.x;
    if (exp.pca_components > 0) {
        pca = fit_pca(cv_part.x, exp.pca_components);
        train_base = project(*pca, cv_part.x);
        test_base = project(*pca, held.x);
    }
    const ScalerParams scaler = fit_scaler(train_base);
    const Eigen::MatrixXd scaled_test = transform(scaler, test_base);

    std::ofstream out = open_output(dir / "holdout.csv");
    out << "model,phase,accuracy,precision,recall,f1\n";
    const int n_classes = std::max(cv_part.n_classes(), held.n_classes());

    std::vector<Phase> phases;
    if (exp.run_before) phases.push_back(Phase::Before);
    if (exp.run_after) phases.push_back(Phase::After);
    for (Phase phase : phases) {
        Eigen::MatrixXd scaled_train = transform(scaler, train_base);
        Eigen::MatrixXd unscaled_train = train_base;
        std::vector<int> y_train = cv_part.y;
        if (phase == Phase::After) {
            OversampleConfig qs = exp.qsmote;
            if (qs.minority_labels.empty()) {
                const ClassCounts counts = count_classes(y_train);
                for (const auto& [label, n] : counts.per_label)
                    if (n < counts.majority_count) qs.minority_labels.insert(label);
            }
            const LabeledDataset balanced = oversample({scaled_train, y_train}, qs, nullptr);
            scaled_train = balanced.x;
            unscaled_train = inverse_transform(scaler, balanced.x);
            y_train = balanced.y;
        }
        for (ModelKind kind : exp.models) {
            const bool scaled_kind =
                kind == ModelKind::LR || kind == ModelKind::SVM || kind == ModelKind::NB;
            const TrainedModel model = train(kind, scaled_kind ? scaled_train : unscaled_train,
                                             y_train, exp.seed, exp.train_options);
            const std::vector<int> y_pred =
                predict(model, scaled_kind ? scaled_test : test_base);
            const MetricsReport m = compute_metrics(held.y, y_pred, n_classes);
            out << model_name(kind) << ',' << phase_name(phase) << ',' << g6(m.accuracy) << ','
                << g6(m.precision_weighted) << ',' << g6(m.recall_weighted) << ','
                << g6(m.f1_weighted) << '\n';
        }
    }
}

ExperimentResult run_from_config(const RunConfig& config, const fs::path& dir) {
    const LoadedCsv csv = load_csv(config.dataset_path, config.label_column);
    const ExperimentConfig exp = experiment_config(config, csv);

    LabeledDataset cv_part = csv.data;
    if (config.holdout > 0.0) {
        LabeledDataset held;
        split_holdout(csv.data, config.holdout, config.seed, cv_part, held);
        const ExperimentResult result = run_experiment(cv_part, exp);
        write_metrics_csv(dir, result);
        write_aggregates_csv(dir, result);
        write_holdout_csv(dir, cv_part, held, exp);
        return result;
    }

    const ExperimentResult result = run_experiment(cv_part, exp);
    write_metrics_csv(dir, result);
    write_aggregates_csv(dir, result);
    return result;
}

}  // namespace

void cmd_balance(const RunConfig& config) {
    validate_common(config);
    const fs::path dir = prepare_output_dir(config);
    const LoadedCsv csv = load_csv(config.dataset_path, config.label_column);

    OversampleConfig qs = qsmote_config(config, csv);
    if (qs.minority_labels.empty()) {
        const ClassCounts counts = count_classes(csv.data.y);
        for (const auto& [label, n] : counts.per_label)
            if (n < counts.majority_count) qs.minority_labels.insert(label);
    }

    // Synthesis runs in the standardized space (the angle-to-step coupling
    // assumes unit scales); synthetics are mapped back to input units.
    const ScalerParams scaler = fit_scaler(csv.data.x);
    std::vector<SynthesisRecord> trace;
    const LabeledDataset balanced =
        oversample({transform(scaler, csv.data.x), csv.data.y}, qs,
                   config.trace ? &trace : nullptr);

    LoadedCsv out = csv;
    out.data.y = balanced.y;
    out.data.x.resize(balanced.n_rows(), csv.data.n_features());
    out.data.x.topRows(csv.data.n_rows()) = csv.data.x;  // originals bit-identical
    out.data.x.bottomRows(balanced.n_rows() - csv.data.n_rows()) =
        inverse_transform(scaler, balanced.x.bottomRows(balanced.n_rows() - csv.data.n_rows()));
    write_dataset_csv((dir / "balanced.csv").string(), out);

    const ClassCounts before = count_classes(csv.data.y);
    const ClassCounts after = count_classes(balanced.y);
    std::cout << "class,before,after\n";
    for (const auto& [label, n] : before.per_label)
        std::cout << csv.label_names[static_cast<std::size_t>(label)] << ',' << n << ','
                  << after.per_label.at(label) << '\n';

    if (config.trace) {
        std::ofstream tr = open_output(dir / "trace.csv");
        tr << "label,seed_row,cluster,angle,step\n";
        for (const auto& rec : trace)
            tr << csv.label_names[static_cast<std::size_t>(rec.label)] << ',' << rec.seed_row
               << ',' << rec.cluster_id << ',' << g6(rec.angle) << ',' << g6(rec.step) << '\n';
    }
}

void cmd_evaluate(const RunConfig& config) {
    validate_common(config);
    const fs::path dir = prepare_output_dir(config);
    const ExperimentResult result = run_from_config(config, dir);

    std::cout << "model,phase,accuracy_mean,accuracy_std\n";
    for (const auto& agg : result.aggregates) {
        if (agg.channel) continue;
        std::cout << model_name(agg.model) << ',' << phase_name(agg.phase) << ','
                  << g6(agg.accuracy_mean) << ',' << g6(agg.accuracy_std) << '\n';
    }
}

void cmd_noise_sweep(const RunConfig& config) {
    validate_common(config);
    if (config.channels.empty() || config.probabilities.empty())
        throw ConfigError("noise-sweep needs at least one channel and one probability");
    if (config.sweep_phase != "before" && config.sweep_phase != "after")
        throw ConfigError("sweep_phase must be 'before' or 'after'");

    const fs::path dir = prepare_output_dir(config);
    const ExperimentResult result = run_from_config(config, dir);
    const Phase phase = config.sweep_phase == "before" ? Phase::Before : Phase::After;

    for (const auto& name : config.channels) {
        const ChannelKind kind = channel_from_name(name);
        std::ofstream out = open_output(dir / ("sweep_" + name + ".dat"));
        out << "# probability";
        for (const auto& model : config.models) out << ' ' << model;
        out << '\n';
        for (double p : config.probabilities) {
            out << g6(p);
            for (const auto& model : config.models) {
                const ModelKind mk = model_from_name(model);
                bool found = false;
                for (const auto& agg : result.aggregates) {
                    const bool matches_cell =
                        p == 0.0 ? !agg.channel
                                 : (agg.channel && *agg.channel == kind &&
                                    agg.probability == p);
                    if (agg.model == mk && agg.phase == phase && matches_cell) {
                        out << ' ' << g6(agg.accuracy_mean);
                        found = true;
                        break;
                    }
                }
                if (!found) throw InternalError("missing aggregate for sweep cell");
            }
            out << '\n';
        }
    }
}

int cmd_validate_channels(bool inject_fault, std::ostream& out) {
    using Eigen::Matrix2cd;
    // Probe states: |0><0|, |1><1|, |+><+|, |i><i|, and a mixed state.
    std::vector<Matrix2cd> probes;
    probes.push_back((Matrix2cd() << 1, 0, 0, 0).finished());
    probes.push_back((Matrix2cd() << 0, 0, 0, 1).finished());
    probes.push_back((Matrix2cd() << 0.5, 0.5, 0.5, 0.5).finished());
    probes.push_back((Matrix2cd() << 0.5, Complex(0, -0.5), Complex(0, 0.5), 0.5).finished());
    probes.push_back((Matrix2cd() << 0.7, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.3).finished());

    int passed = 0;
    double worst_residual = 0.0;
    for (ChannelKind kind : kAllChannelKinds) {
        double max_residual = 0.0;
        double max_trace_dev = 0.0;
        double max_herm_dev = 0.0;
        double min_eig = 0.0;
        for (int step = 0; step <= 100; ++step) {
            const NoiseChannel channel = make_channel(kind, static_cast<double>(step) / 100.0);
            KrausSet kraus = kraus_operators(channel);
            if (inject_fault && kind == ChannelKind::Depolarizing && step == 50)
                kraus.operators[0] *= 1.001;
            max_residual = std::max(max_residual, completeness_residual(kraus));

            for (const auto& probe : probes) {
                Matrix2cd zeta = Matrix2cd::Zero();
                for (const auto& e : kraus.operators) zeta += e * probe * e.adjoint();
                max_trace_dev = std::max(max_trace_dev, std::abs(zeta.trace() - Complex(1.0)));
                max_herm_dev =
                    std::max(max_herm_dev, (zeta - zeta.adjoint()).cwiseAbs().maxCoeff());
                Eigen::SelfAdjointEigenSolver<Matrix2cd> solver(zeta);
                min_eig = std::min(min_eig, solver.eigenvalues().minCoeff());
            }
        }
        const bool ok = max_residual < 1e-12 && max_trace_dev < 1e-12 && max_herm_dev < 1e-12 &&
                        min_eig >= -1e-10;
        out << channel_name(kind) << ": " << (ok ? "CPTP" : "FAILED")
            << " (completeness residual " << max_residual << ", trace dev " << max_trace_dev
            << ", min eigenvalue " << min_eig << ")\n";
        if (ok) ++passed;
        worst_residual = std::max(worst_residual, max_residual);
    }
    out << passed << "/6 channels CPTP; max completeness residual " << worst_residual << "\n";
    return passed == 6 ? 0 : 1;
}

}  // namespace qsmote
