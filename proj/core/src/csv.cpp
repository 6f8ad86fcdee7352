#include "qsmote/csv.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "qsmote/errors.hpp"

namespace qsmote {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

bool parse_double(const std::string& text, double& out) {
    if (text.empty()) return false;
    errno = 0;
    char* end = nullptr;
    out = std::strtod(text.c_str(), &end);
    return end == text.c_str() + text.size() && errno == 0;
}

}  // namespace

LoadedCsv load_csv(const std::string& path, const std::string& label_column) {
    std::ifstream in(path);
    if (!in) throw EmptyFile("cannot open '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw EmptyFile("'" + path + "' is empty");
    std::vector<std::string> header = split_line(line);
    for (auto& h : header) h = trim(h);

    Eigen::Index label_idx = -1;
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == label_column) label_idx = static_cast<Eigen::Index>(i);
    if (label_idx < 0)
        throw MissingLabelColumn("no column named '" + label_column + "' in '" + path + "'");

    std::vector<std::vector<std::string>> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<std::string> fields = split_line(line);
        if (fields.size() != header.size())
            throw DataError("'" + path + "' line " + std::to_string(line_no) + " has " +
                            std::to_string(fields.size()) + " fields, header has " +
                            std::to_string(header.size()));
        rows.push_back(std::move(fields));
    }
    if (rows.empty()) throw EmptyFile("'" + path + "' has a header but no data rows");

    // First pass: columns with any unparseable cell are reported together so
    // the user can drop them all at once (timestamps, free text, ...).
    std::vector<std::string> bad_columns;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (static_cast<Eigen::Index>(c) == label_idx) continue;
        for (const auto& row : rows) {
            double v;
            if (!parse_double(trim(row[c]), v)) {
                bad_columns.push_back(header[c]);
                break;
            }
        }
    }
    if (!bad_columns.empty()) {
        std::string msg = "non-numeric feature column(s) in '" + path + "':";
        for (const auto& name : bad_columns) msg += " " + name;
        msg += " (drop or encode them before loading)";
        throw NonNumericFeature(msg);
    }

    LoadedCsv out;
    out.label_column_name = label_column;
    for (std::size_t c = 0; c < header.size(); ++c)
        if (static_cast<Eigen::Index>(c) != label_idx) out.feature_names.push_back(header[c]);

    const auto n = static_cast<Eigen::Index>(rows.size());
    const auto d = static_cast<Eigen::Index>(out.feature_names.size());
    out.data.x.resize(n, d);
    out.data.y.reserve(rows.size());

    std::map<std::string, int> label_codes;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Eigen::Index feature = 0;
        for (std::size_t c = 0; c < header.size(); ++c) {
            const std::string cell = trim(rows[r][c]);
            if (static_cast<Eigen::Index>(c) == label_idx) {
                auto [it, inserted] =
                    label_codes.emplace(cell, static_cast<int>(out.label_names.size()));
                if (inserted) out.label_names.push_back(cell);
                out.data.y.push_back(it->second);
                continue;
            }
            double v = 0.0;
            parse_double(cell, v);
            if (!std::isfinite(v))
                throw NaNValue("non-finite value at row " + std::to_string(r + 2) +
                               ", column '" + header[c] + "' of '" + path + "'");
            out.data.x(static_cast<Eigen::Index>(r), feature++) = v;
        }
    }
    return out;
}

void write_dataset_csv(const std::string& path, const LoadedCsv& csv) {
    std::ofstream out(path);
    if (!out) throw UnwritableOutput("cannot write '" + path + "'");

    for (const auto& name : csv.feature_names) out << name << ',';
    out << csv.label_column_name << '\n';

    char buf[32];
    for (Eigen::Index i = 0; i < csv.data.n_rows(); ++i) {
        for (Eigen::Index j = 0; j < csv.data.n_features(); ++j) {
            // %.17g keeps the round trip exact.
            std::snprintf(buf, sizeof buf, "%.17g", csv.data.x(i, j));
            out << buf << ',';
        }
        const auto code = static_cast<std::size_t>(csv.data.y[static_cast<std::size_t>(i)]);
        out << csv.label_names[code] << '\n';
    }
    if (!out) throw UnwritableOutput("error while writing '" + path + "'");
}

}  // namespace qsmote
