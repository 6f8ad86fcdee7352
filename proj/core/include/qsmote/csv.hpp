#pragma once

#include <string>
#include <vector>

#include "qsmote/dataset.hpp"

namespace qsmote {

// A dataset loaded from CSV together with its column names and the
// order-of-appearance label encoding (label_names[code] = original text).
struct LoadedCsv {
    LabeledDataset data;
    std::vector<std::string> feature_names;
    std::vector<std::string> label_names;
    std::string label_column_name = "label";
};

// Reads a CSV with a header row, numeric feature columns, and one label
// column (any position). Labels are re-encoded to 0..K-1 by order of first
// appearance. Columns containing non-numeric cells are rejected together in
// one NonNumericFeature error; numeric but non-finite cells raise NaNValue
// with their row and column. Throws MissingLabelColumn, EmptyFile too.
LoadedCsv load_csv(const std::string& path, const std::string& label_column = "label");

// Writes a dataset back out with full round-trip float precision; labels are
// written through label_names. Throws UnwritableOutput.
void write_dataset_csv(const std::string& path, const LoadedCsv& csv);

}  // namespace qsmote
