// Regenerates the committed Gaussian-blob fixtures under data/. The CSVs in
// the repository are the output of this tool with its default arguments; the
// draws go through the toolkit's own portable RNG, so the files reproduce
// bit-identically on any platform.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qsmote/rng.hpp"

namespace {

struct BlobSpec {
    std::vector<int> counts;
    std::vector<Eigen::VectorXd> centers;
    double stddev = 1.0;
};

void write_blobs(const std::string& path, const BlobSpec& blobs, std::uint64_t seed) {
    const auto d = static_cast<Eigen::Index>(blobs.centers.front().size());
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        std::exit(1);
    }
    for (Eigen::Index j = 0; j < d; ++j) out << 'f' << j << ',';
    out << "label\n";

    char buf[32];
    for (std::size_t cls = 0; cls < blobs.counts.size(); ++cls) {
        qsmote::Rng rng =
            qsmote::make_rng(qsmote::derive_seed(seed, 0x626c6f6273ULL, cls));
        for (int i = 0; i < blobs.counts[cls]; ++i) {
            for (Eigen::Index j = 0; j < d; ++j) {
                const double v = blobs.centers[cls][j] + blobs.stddev * qsmote::normal01(rng);
                std::snprintf(buf, sizeof buf, "%.17g", v);
                out << buf << ',';
            }
            out << cls << '\n';
        }
    }
    std::cout << "wrote " << path << "\n";
}

Eigen::VectorXd center(std::initializer_list<double> coords) {
    Eigen::VectorXd c(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (double v : coords) c[i++] = v;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "data";

    // blobs4: imbalanced 4-class fixture, 300 rows. Classes 0..2 sit well
    // apart; the smallest class 3 leans toward class 0 so imbalance actually
    // costs accuracy before oversampling.
    BlobSpec blobs4;
    blobs4.counts = {200, 50, 30, 20};
    blobs4.centers = {
        center({0.0, 0.0, 0.0, 0.0, 0.0, 0.0}),
        center({8.0, 0.0, 0.0, 0.0, 0.0, 0.0}),
        center({0.0, 8.0, 0.0, 0.0, 0.0, 0.0}),
        center({3.2, 3.2, 0.0, 0.0, 0.0, 0.0}),
    };
    write_blobs(dir + "/blobs4.csv", blobs4, 42);

    // blobs2: binary fixture for the smaller tests.
    BlobSpec blobs2;
    blobs2.counts = {120, 40};
    blobs2.centers = {
        center({0.0, 0.0, 0.0, 0.0, 0.0, 0.0}),
        center({3.0, 3.0, 0.0, 0.0, 0.0, 0.0}),
    };
    write_blobs(dir + "/blobs2.csv", blobs2, 42);
    return 0;
}
