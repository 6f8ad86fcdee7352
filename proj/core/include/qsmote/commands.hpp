#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qsmote {

// One flat bag of knobs filled by the CLI (flags, key=value config file,
// QSMOTE_SEED). Validation happens in the command entry points so the same
// checks cover both config files and flags.
struct RunConfig {
    std::string dataset_path;
    std::string label_column = "label";
    std::string output_dir = "out";

    int pca_components = 0;  // 0 = off; 32 is the usual choice for image-embedding CSVs

    // QSMOTE
    std::vector<std::string> minority_labels;  // empty = auto (every non-majority label)
    int clusters = 4;
    double split_factor = 5.0;
    int shots = 0;  // 0 = analytic angles
    std::uint64_t seed = 42;
    bool clamp = false;
    bool fold_internal = true;
    bool trace = false;  // per-synthesis trace from `balance`

    // Evaluation
    int folds = 5;
    std::vector<std::string> models = {"LR", "RF", "SVM", "NB", "DT"};
    std::vector<std::string> channels;
    std::vector<double> probabilities;
    bool corrupt_train = false;
    std::string sweep_phase = "after";
    double holdout = 0.0;  // extra held-out fraction on top of CV
};

// Writes <out>/balanced.csv (originals first, synthetics appended) and
// prints per-class before/after counts.
void cmd_balance(const RunConfig& config);

// Writes <out>/metrics.csv and <out>/aggregates.csv (and <out>/holdout.csv
// when a holdout fraction is set).
void cmd_evaluate(const RunConfig& config);

// Requires a non-empty noise grid; additionally writes one plottable
// <out>/sweep_<channel>.dat per channel (probability column plus one
// mean-accuracy column per model).
void cmd_noise_sweep(const RunConfig& config);

// CPTP report over all six channels on a 101-point probability grid.
// Returns 0 when every check passes. inject_fault corrupts one Kraus set on
// purpose so the failure path stays testable.
int cmd_validate_channels(bool inject_fault, std::ostream& out);

}  // namespace qsmote
