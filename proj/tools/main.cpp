// qsmote: quantum-inspired oversampling, noise-channel corruption, and
// classifier benchmarking over CSV datasets.
//
// Exit codes: 0 ok, 2 config error, 3 data error, 4 internal failure.

#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "qsmote/commands.hpp"
#include "qsmote/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"quantum-inspired oversampler, noise channels, and classifier benchmark"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.set_config("--config", "", "Read options from a plain key=value file");

    qsmote::RunConfig config;

    app.add_option("-d,--dataset", config.dataset_path, "Input CSV with a header row");
    app.add_option("--label-column", config.label_column,
                   "Name of the label column (default: label)");
    app.add_option("-o,--out", config.output_dir, "Output directory (default: out)");
    app.add_option("--seed", config.seed, "Master seed")->envname("QSMOTE_SEED");
    app.add_option("--pca", config.pca_components,
                   "PCA components fitted per training split (0 = off; 32 suits "
                   "image-embedding CSVs)");

    app.add_option("--minority-labels", config.minority_labels,
                   "Labels to oversample, as written in the CSV (default: auto)")
        ->delimiter(',');
    app.add_option("--clusters", config.clusters, "K-means cluster count");
    app.add_option("--split-factor", config.split_factor, "Step divisor kappa");
    app.add_option("--shots", config.shots,
                   "Swap-test shots per synthesis (0 = analytic angles)");
    app.add_flag("--clamp", config.clamp, "Cap steps at the centroid distance");
    app.add_flag("--trace", config.trace, "balance: also write a per-synthesis trace.csv");

    app.add_option("--folds", config.folds, "Stratified CV fold count");
    app.add_option("--models", config.models, "Subset of LR,RF,SVM,NB,DT")->delimiter(',');
    app.add_option("--channels", config.channels,
                   "Noise channels (bit_flip, phase_flip, bit_phase_flip, depolarizing, "
                   "amplitude_damping, phase_damping)")
        ->delimiter(',');
    app.add_option("--probabilities", config.probabilities, "Noise probability grid")
        ->delimiter(',');
    app.add_flag("--corrupt-train", config.corrupt_train,
                 "Corrupt the training split too (default: test only)");
    app.add_flag("!--no-fold-internal", config.fold_internal,
                 "Oversample the whole dataset before splitting instead of per fold");
    app.add_option("--holdout", config.holdout,
                   "Extra held-out fraction evaluated after CV (0 = off)");
    app.add_option("--sweep-phase", config.sweep_phase,
                   "noise-sweep: phase plotted in the .dat files (before|after)");

    bool inject_fault = false;
    app.add_flag("--self-test-fault", inject_fault)->group("");  // hidden test hook

    CLI::App* balance = app.add_subcommand("balance", "Oversample a CSV to class balance");
    CLI::App* evaluate =
        app.add_subcommand("evaluate", "Cross-validated before/after-QSMOTE benchmark");
    CLI::App* sweep =
        app.add_subcommand("noise-sweep", "Accuracy-vs-noise-probability sweep with plot data");
    CLI::App* validate =
        app.add_subcommand("validate-channels", "CPTP report for all six noise channels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (balance->parsed()) qsmote::cmd_balance(config);
        if (evaluate->parsed()) qsmote::cmd_evaluate(config);
        if (sweep->parsed()) qsmote::cmd_noise_sweep(config);
        if (validate->parsed()) return qsmote::cmd_validate_channels(inject_fault, std::cout);
    } catch (const qsmote::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const qsmote::DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
