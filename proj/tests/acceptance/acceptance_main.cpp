// Acceptance suite: every criterion prints exactly one PASS/FAIL line and the
// binary exits nonzero if any criterion fails. Tolerances are pinned in code.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qsmote/channels.hpp"
#include "qsmote/cluster.hpp"
#include "qsmote/commands.hpp"
#include "qsmote/csv.hpp"
#include "qsmote/eval.hpp"
#include "qsmote/qsmote.hpp"
#include "qsmote/swaptest.hpp"

using namespace qsmote;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

class Criterion {
  public:
    Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

    void fail(const std::string& why) {
        if (!failed_) detail_ = why;
        failed_ = true;
    }

    void note(const std::string& extra) { notes_ += extra; }

    ~Criterion() {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start_)
                                 .count();
        if (failed_) {
            ++g_failures;
            std::cout << "FAIL criterion " << number_ << ": " << title_ << " — " << detail_
                      << " [" << elapsed << " ms]" << notes_ << "\n";
        } else {
            std::cout << "PASS criterion " << number_ << ": " << title_ << " [" << elapsed
                      << " ms]" << notes_ << "\n";
        }
    }

  private:
    int number_;
    std::string title_;
    std::chrono::steady_clock::time_point start_;
    bool failed_ = false;
    std::string detail_;
    std::string notes_;
};

std::string fixture(const std::string& name) {
    return std::string(QSMOTE_SOURCE_DIR) + "/data/" + name;
}

fs::path fresh_dir(const std::string& tag) {
    const auto dir = fs::temp_directory_path() / ("qsmote_acceptance_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// The command entry points print run summaries; keep the acceptance output
// to one line per criterion.
struct QuietCout {
    std::stringstream sink;
    std::streambuf* saved = std::cout.rdbuf();
    QuietCout() { std::cout.rdbuf(sink.rdbuf()); }
    ~QuietCout() { std::cout.rdbuf(saved); }
};

Eigen::VectorXd random_unit(Eigen::Index d, Rng& rng) {
    Eigen::VectorXd v(d);
    double norm = 0.0;
    do {
        for (Eigen::Index i = 0; i < d; ++i) v[i] = 2.0 * uniform01(rng) - 1.0;
        norm = v.norm();
    } while (norm < 1e-3);
    return v / norm;
}

// ---------------------------------------------------------------------------

void criterion_1_swaptest_fidelity() {
    Criterion c(1, "swap-test sampled estimates track the analytic inner product");
    Rng rng = make_rng(4242);
    const Eigen::Index dims[] = {2, 4, 8, 16};
    for (int pair = 0; pair < 50; ++pair) {
        const Eigen::Index d = dims[pair % 4];
        const Eigen::VectorXd cv = random_unit(d, rng);
        const Eigen::VectorXd mv = random_unit(d, rng);

        // independent dot-product oracle, hand-looped
        double dot = 0.0, nc2 = 0.0, nm2 = 0.0;
        for (Eigen::Index i = 0; i < d; ++i) {
            dot += cv[i] * mv[i];
            nc2 += cv[i] * cv[i];
            nm2 += mv[i] * mv[i];
        }
        const double oracle = dot / std::sqrt(nc2 * nm2);
        const OverlapEstimate analytic = overlap_analytic(cv, mv);
        if (std::abs(analytic.inner_product - oracle) > 1e-12) {
            c.fail("analytic overlap deviates from the dot-product oracle");
            return;
        }

        double sum = 0.0;
        for (int rep = 0; rep < 20; ++rep) {
            Rng stream = make_rng(derive_seed(777, static_cast<std::uint64_t>(pair),
                                              static_cast<std::uint64_t>(rep)));
            sum += estimate_angle_sampled(cv, mv, 1000, stream).inner_product;
        }
        const double err = std::abs(sum / 20.0 - analytic.inner_product);
        if (err > 0.05) {
            c.fail("pair " + std::to_string(pair) + " mean estimate off by " +
                   std::to_string(err));
            return;
        }
    }
}

void criterion_2_eq8_closure() {
    Criterion c(2, "ancilla-0 probability and overlap formulas invert each other");
    Rng rng = make_rng(88);
    for (int pair = 0; pair < 100; ++pair) {
        const Eigen::Index d = 2 + static_cast<Eigen::Index>(uniform_below(rng, 15));
        Eigen::VectorXd cv(d), mv(d);
        for (Eigen::Index i = 0; i < d; ++i) {
            cv[i] = 4.0 * uniform01(rng) - 2.0;
            mv[i] = 4.0 * uniform01(rng) - 2.0;
        }
        if (cv.norm() < 1e-6 || mv.norm() < 1e-6) continue;
        const OverlapEstimate est = overlap_analytic(cv, mv);
        const double nc = cv.norm(), nm = mv.norm();
        const double round_trip = (3.0 - 4.0 * est.p0) * est.z_norm / (2.0 * nc * nm);
        if (std::abs(round_trip - est.inner_product) > 1e-12) {
            c.fail("round trip error " + std::to_string(std::abs(round_trip - est.inner_product)));
            return;
        }
    }
}

void criterion_3_cptp_suite() {
    Criterion c(3, "all six channels are CPTP across the 101-point grid");
    const Eigen::Matrix2cd x_op = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
    const Eigen::Matrix2cd y_op =
        (Eigen::Matrix2cd() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
    const Eigen::Matrix2cd z_op = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();

    Rng rng = make_rng(31);
    std::vector<DensityMatrix> probes;
    for (int t = 0; t < 4; ++t) {
        const Complex a(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);
        const Complex b(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);
        const double norm = std::sqrt(std::norm(a) + std::norm(b));
        DensityMatrix rho;
        rho.n_qubits = 1;
        rho.matrix.resize(2, 2);
        rho.matrix << a / norm * std::conj(a / norm), a / norm * std::conj(b / norm),
            b / norm * std::conj(a / norm), b / norm * std::conj(b / norm);
        probes.push_back(rho);
    }

    for (ChannelKind kind : kAllChannelKinds) {
        for (int step = 0; step <= 100; ++step) {
            const double p = static_cast<double>(step) / 100.0;
            const NoiseChannel channel = make_channel(kind, p);
            if (completeness_residual(kraus_operators(channel)) >= 1e-12) {
                c.fail(channel_name(kind) + " completeness residual at p=" + std::to_string(p));
                return;
            }
            for (const auto& rho : probes) {
                const DensityMatrix zeta = apply_channel(rho, channel);
                if (trace_deviation(zeta) >= 1e-12 || !is_hermitian(zeta, 1e-12) ||
                    min_eigenvalue(zeta) < -1e-10) {
                    c.fail(channel_name(kind) + " output invalid at p=" + std::to_string(p));
                    return;
                }
                // convex zeta forms for the Pauli mixtures
                const Eigen::Matrix2cd m = rho.matrix;
                Eigen::Matrix2cd expected;
                bool have_expected = true;
                switch (kind) {
                    case ChannelKind::BitFlip: expected = (1 - p) * m + p * x_op * m * x_op; break;
                    case ChannelKind::PhaseFlip: expected = (1 - p) * m + p * z_op * m * z_op; break;
                    case ChannelKind::BitPhaseFlip:
                        expected = (1 - p) * m + p * y_op * m * y_op;
                        break;
                    case ChannelKind::Depolarizing:
                        expected = (1 - p) * m +
                                   (p / 3) * (x_op * m * x_op + y_op * m * y_op + z_op * m * z_op);
                        break;
                    default: have_expected = false;
                }
                if (have_expected &&
                    (zeta.matrix - expected).cwiseAbs().maxCoeff() >= 1e-12) {
                    c.fail(channel_name(kind) + " deviates from its convex form");
                    return;
                }
            }
        }
    }
}

void criterion_4_channel_spot_values() {
    Criterion c(4, "channel spot values match the Kraus definitions");
    DensityMatrix ket0;
    ket0.n_qubits = 1;
    ket0.matrix = (Eigen::Matrix2cd() << 1, 0, 0, 0).finished();
    DensityMatrix ket1;
    ket1.n_qubits = 1;
    ket1.matrix = (Eigen::Matrix2cd() << 0, 0, 0, 1).finished();
    DensityMatrix plus;
    plus.n_qubits = 1;
    plus.matrix = (Eigen::Matrix2cd() << 0.5, 0.5, 0.5, 0.5).finished();

    const DensityMatrix flip = apply_channel(ket0, make_channel(ChannelKind::BitFlip, 1.0));
    if ((flip.matrix - ket1.matrix).cwiseAbs().maxCoeff() > 1e-12)
        c.fail("bit flip at p=1 does not map |0><0| to |1><1|");

    Rng rng = make_rng(5);
    for (int t = 0; t < 3; ++t) {
        const Complex a(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);
        const Complex b(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);
        const double norm = std::sqrt(std::norm(a) + std::norm(b));
        DensityMatrix pure;
        pure.n_qubits = 1;
        pure.matrix.resize(2, 2);
        pure.matrix << a / norm * std::conj(a / norm), a / norm * std::conj(b / norm),
            b / norm * std::conj(a / norm), b / norm * std::conj(b / norm);
        const DensityMatrix mixed =
            apply_channel(pure, make_channel(ChannelKind::Depolarizing, 0.75));
        if ((mixed.matrix - 0.5 * Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-12)
            c.fail("depolarizing at p=3/4 does not fully mix a pure state");
    }

    const DensityMatrix damped =
        apply_channel(ket1, make_channel(ChannelKind::AmplitudeDamping, 0.36));
    if (std::abs(damped.matrix(0, 0) - Complex(0.36)) > 1e-12 ||
        std::abs(damped.matrix(1, 1) - Complex(0.64)) > 1e-12 ||
        std::abs(damped.matrix(0, 1)) > 1e-12)
        c.fail("amplitude damping at p=0.36 deviates from diag(0.36, 0.64)");

    const DensityMatrix dephased =
        apply_channel(plus, make_channel(ChannelKind::PhaseDamping, 1.0));
    if ((dephased.matrix - 0.5 * Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-12)
        c.fail("phase damping at p=1 does not kill the coherences of |+><+|");
}

void criterion_5_qsmote_balance_geometry() {
    Criterion c(5, "QSMOTE balances the fixture and obeys the step geometry");
    const LoadedCsv csv = load_csv(fixture("blobs4.csv"));
    LabeledDataset data = csv.data;
    data.x = transform(fit_scaler(data.x), data.x);  // pipeline space

    for (bool clamp : {false, true}) {
        OversampleConfig config;
        config.clusters = 4;
        config.seed = 42;
        config.clamp_to_centroid = clamp;
        for (const auto& [label, n] : class_counts(data.y))
            if (n < 200) config.minority_labels.insert(label);

        std::vector<SynthesisRecord> trace;
        const LabeledDataset out = oversample(data, config, &trace);

        for (const auto& [label, n] : class_counts(out.y)) {
            if (n != 200) {
                c.fail("class " + std::to_string(label) + " has " + std::to_string(n) +
                       " rows, expected 200");
                return;
            }
        }

        const KMeansModel kmeans = fit_kmeans(data.x, config.clusters, config.seed);
        Eigen::Index row = data.n_rows();
        for (const auto& rec : trace) {
            const Eigen::VectorXd seed_x = data.x.row(rec.seed_row).transpose();
            const Eigen::VectorXd centroid = kmeans.centroids.row(rec.cluster_id).transpose();
            const Eigen::VectorXd synth = out.x.row(row++).transpose();
            const double step = (synth - seed_x).norm();

            // independent oracle: arccos of the clipped cosine similarity
            const double cosine =
                seed_x.dot(centroid) / (seed_x.norm() * centroid.norm());
            const double oracle_angle = std::acos(std::min(1.0, std::max(-1.0, cosine)));
            if (std::abs(rec.angle - oracle_angle) > 1e-9) {
                c.fail("trace angle deviates from the arccos oracle");
                return;
            }
            if (step > oracle_angle / config.split_factor + 1e-12) {
                c.fail("step exceeds angle/kappa");
                return;
            }
            if (clamp) {
                const double dist = (centroid - seed_x).norm();
                if (step > dist + 1e-9) {
                    c.fail("clamped step leaves the segment");
                    return;
                }
                if (step > 1e-12 &&
                    (synth - seed_x - step * (centroid - seed_x) / dist).norm() > 1e-9) {
                    c.fail("clamped synthetic is off the segment direction");
                    return;
                }
            } else if (step > 1e-12) {
                const Eigen::VectorXd direction = (centroid - seed_x).normalized();
                if ((synth - seed_x - step * direction).norm() > 1e-9) {
                    c.fail("synthetic is off the ray toward the centroid");
                    return;
                }
            }
        }
    }
}

void criterion_6_directional_gain() {
    Criterion c(6, "RF and DT gain from QSMOTE on the committed fixture (seed 42)");
    const LoadedCsv csv = load_csv(fixture("blobs4.csv"));

    struct Gains {
        double rf_before = 0, rf_after = 0, dt_before = 0, dt_after = 0;
    };
    auto run_seed = [&](std::uint64_t seed) {
        ExperimentConfig config;
        config.models = {ModelKind::RF, ModelKind::DT};
        config.seed = seed;
        config.qsmote.seed = seed;
        const ExperimentResult result = run_experiment(csv.data, config);
        Gains g;
        for (const auto& agg : result.aggregates) {
            if (agg.channel) continue;
            double& slot = agg.model == ModelKind::RF
                               ? (agg.phase == Phase::Before ? g.rf_before : g.rf_after)
                               : (agg.phase == Phase::Before ? g.dt_before : g.dt_after);
            slot = agg.accuracy_mean;
        }
        return g;
    };

    const Gains committed = run_seed(42);
    const double rf_before = committed.rf_before, rf_after = committed.rf_after;
    const double dt_before = committed.dt_before, dt_after = committed.dt_after;
    if (rf_after < rf_before) c.fail("RF after < before on the committed seed");
    if (dt_after < dt_before) c.fail("DT after < before on the committed seed");
    if (rf_after < 0.90) c.fail("RF after " + std::to_string(rf_after) + " < 0.90");

    std::ostringstream report;
    report << " | seed42 RF " << rf_before << "->" << rf_after << " DT " << dt_before << "->"
           << dt_after;
    for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
        const Gains g = run_seed(seed);
        report << "; seed" << seed << " RF " << g.rf_before << "->" << g.rf_after << " DT "
               << g.dt_before << "->" << g.dt_after;
    }
    c.note(report.str());
}

void criterion_7_metrics_oracle() {
    Criterion c(7, "metrics match ten hand-computed confusion matrices");
    struct Case {
        std::vector<int> y_true;
        std::vector<int> y_pred;
        int n_classes;
        double acc, prec, rec, f1;
    };
    const std::vector<Case> cases = {
        // worked example: class 0 P=R=1/2, class 1 P=R=2/3
        {{0, 0, 1, 1, 1}, {0, 1, 1, 1, 0}, 2, 0.6, 0.6, 0.6, 0.6},
        {{0, 1, 2, 0, 1, 2}, {0, 1, 2, 0, 1, 2}, 3, 1.0, 1.0, 1.0, 1.0},
        {{0, 0, 1, 1}, {1, 1, 0, 0}, 2, 0.0, 0.0, 0.0, 0.0},
        // zero-division: class 1 never predicted
        {{0, 0, 1, 1}, {0, 0, 0, 0}, 2, 0.5, 0.25, 0.5, 1.0 / 3.0},
        {{1, 1, 1, 0}, {1, 1, 1, 1}, 2, 0.75, 9.0 / 16.0, 0.75, 9.0 / 14.0},
        {{0, 0, 0, 0, 1, 1, 2}, {0, 0, 1, 2, 1, 0, 2}, 3, 4.0 / 7.0, 25.0 / 42.0, 4.0 / 7.0,
         83.0 / 147.0},
        {{0, 1, 0, 1, 0}, {0, 1, 1, 1, 0}, 2, 0.8, 13.0 / 15.0, 0.8, 0.8},
        // class 2 present in the label space but without support
        {{0, 1, 0, 1}, {2, 1, 0, 1}, 3, 0.75, 1.0, 0.75, 5.0 / 6.0},
        {{0, 1, 2, 2}, {0, 1, 1, 1}, 3, 0.5, 1.0 / 3.0, 0.5, 0.375},
        {{1, 0}, {0, 1}, 2, 0.0, 0.0, 0.0, 0.0},
    };
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const MetricsReport m = compute_metrics(cases[i].y_true, cases[i].y_pred,
                                                cases[i].n_classes);
        if (std::abs(m.accuracy - cases[i].acc) > 1e-12 ||
            std::abs(m.precision_weighted - cases[i].prec) > 1e-12 ||
            std::abs(m.recall_weighted - cases[i].rec) > 1e-12 ||
            std::abs(m.f1_weighted - cases[i].f1) > 1e-12) {
            c.fail("case " + std::to_string(i + 1) + " deviates from the hand values");
            return;
        }
    }

    Rng rng = make_rng(77);
    for (int trial = 0; trial < 1000; ++trial) {
        const int k = 2 + static_cast<int>(uniform_below(rng, 5));
        std::vector<int> y_true, y_pred;
        for (int cls = 0; cls < k; ++cls) y_true.push_back(cls);
        for (int i = 0; i < 40; ++i) y_true.push_back(static_cast<int>(uniform_below(rng, k)));
        for (std::size_t i = 0; i < y_true.size(); ++i)
            y_pred.push_back(static_cast<int>(uniform_below(rng, k)));
        const MetricsReport m = compute_metrics(y_true, y_pred, k);
        if (std::abs(m.recall_weighted - m.accuracy) > 1e-12) {
            c.fail("recall/accuracy identity broke at trial " + std::to_string(trial));
            return;
        }
    }
}

void criterion_8_noise_sweep_sanity() {
    Criterion c(8, "noise sweep p=0 rows equal clean rows and p=3/4 depolarizing collapses");
    RunConfig config;
    config.dataset_path = fixture("blobs4.csv");
    config.output_dir = fresh_dir("sweep").string();
    config.models = {"NB", "DT"};
    config.channels = {"bit_flip", "depolarizing", "amplitude_damping"};
    config.probabilities = {0.0, 0.25, 0.5, 0.75, 1.0};
    {
        QuietCout quiet;
        cmd_noise_sweep(config);
    }

    // p=0 metric rows equal the clean rows bit-for-bit (string compare).
    std::map<std::string, std::string> clean;  // model,phase,fold -> metrics tail
    std::vector<std::string> rows;
    {
        std::ifstream in(config.output_dir + "/metrics.csv");
        std::string line;
        std::getline(in, line);  // header
        while (std::getline(in, line)) rows.push_back(line);
    }
    for (const auto& line : rows) {
        std::stringstream ss(line);
        std::string model, phase, channel, prob, fold, tail;
        std::getline(ss, model, ',');
        std::getline(ss, phase, ',');
        std::getline(ss, channel, ',');
        std::getline(ss, prob, ',');
        std::getline(ss, fold, ',');
        std::getline(ss, tail);
        if (channel == "none") clean[model + phase + fold] = tail;
    }
    for (const auto& line : rows) {
        std::stringstream ss(line);
        std::string model, phase, channel, prob, fold, tail;
        std::getline(ss, model, ',');
        std::getline(ss, phase, ',');
        std::getline(ss, channel, ',');
        std::getline(ss, prob, ',');
        std::getline(ss, fold, ',');
        std::getline(ss, tail);
        if (channel != "none" && prob == "0" && tail != clean[model + phase + fold]) {
            c.fail("a p=0 row differs from its clean row");
            return;
        }
    }

    // .dat files: one data row per grid probability.
    for (const std::string name : {"bit_flip", "depolarizing", "amplitude_damping"}) {
        std::ifstream in(config.output_dir + "/sweep_" + name + ".dat");
        std::string line;
        int data_rows = 0;
        while (std::getline(in, line))
            if (!line.empty() && line[0] != '#') ++data_rows;
        if (data_rows != 5) {
            c.fail("sweep_" + name + ".dat has " + std::to_string(data_rows) + " rows, not 5");
            return;
        }
    }

    // Depolarizing at p=3/4 pins every non-constant feature to the midpoint.
    const LoadedCsv csv = load_csv(fixture("blobs4.csv"));
    const FeatureBounds bounds = compute_bounds(csv.data.x);
    const Eigen::MatrixXd corrupted =
        corrupt_features(csv.data.x, make_channel(ChannelKind::Depolarizing, 0.75), bounds);
    for (Eigen::Index j = 0; j < corrupted.cols(); ++j) {
        const double mid = 0.5 * (bounds.min[j] + bounds.max[j]);
        if ((corrupted.col(j).array() - mid).abs().maxCoeff() > 1e-12) {
            c.fail("depolarizing at 0.75 did not collapse feature " + std::to_string(j));
            return;
        }
    }
}

void criterion_9_determinism() {
    Criterion c(9, "identical configs produce byte-identical output files");
    RunConfig config;
    config.dataset_path = fixture("blobs4.csv");
    config.models = {"LR", "NB", "DT"};
    config.channels = {"phase_flip"};
    config.probabilities = {0.0, 0.5};

    config.output_dir = fresh_dir("det_a").string();
    {
        QuietCout quiet;
        cmd_evaluate(config);
    }
    const std::string metrics_a = slurp(config.output_dir + "/metrics.csv");
    const std::string agg_a = slurp(config.output_dir + "/aggregates.csv");

    config.output_dir = fresh_dir("det_b").string();
    {
        QuietCout quiet;
        cmd_evaluate(config);
    }
    if (slurp(config.output_dir + "/metrics.csv") != metrics_a ||
        slurp(config.output_dir + "/aggregates.csv") != agg_a)
        c.fail("reruns differ");
}

void criterion_10_classifier_numerics() {
    Criterion c(10, "LR gradient, PCA spectrum, and RF/DT equivalence check out");
    Rng rng = make_rng(99);

    // LR gradient vs central finite differences on a 20x3 fixture.
    Eigen::MatrixXd x(20, 3);
    for (Eigen::Index i = 0; i < 20; ++i)
        for (Eigen::Index j = 0; j < 3; ++j) x(i, j) = 2.0 * uniform01(rng) - 1.0;
    std::vector<int> y;
    for (int i = 0; i < 20; ++i) y.push_back(static_cast<int>(uniform_below(rng, 3)));
    const std::vector<int> classes{0, 1, 2};
    Eigen::MatrixXd w(3, 3);
    Eigen::VectorXd b(3);
    for (Eigen::Index i = 0; i < 3; ++i) {
        b[i] = uniform01(rng) - 0.5;
        for (Eigen::Index j = 0; j < 3; ++j) w(i, j) = uniform01(rng) - 0.5;
    }
    Eigen::MatrixXd grad_w;
    Eigen::VectorXd grad_b;
    logistic_loss(x, y, classes, w, b, 1.0, &grad_w, &grad_b);
    const double h = 1e-6;
    for (Eigen::Index r = 0; r < 3; ++r) {
        for (Eigen::Index cc = 0; cc < 3; ++cc) {
            Eigen::MatrixXd wp = w, wm = w;
            wp(r, cc) += h;
            wm(r, cc) -= h;
            const double fd = (logistic_loss(x, y, classes, wp, b, 1.0, nullptr, nullptr) -
                               logistic_loss(x, y, classes, wm, b, 1.0, nullptr, nullptr)) /
                              (2 * h);
            const double rel =
                std::abs(grad_w(r, cc) - fd) / std::max(1e-8, std::abs(fd));
            if (rel > 1e-4) {
                c.fail("LR gradient relative error " + std::to_string(rel));
                return;
            }
        }
    }

    // PCA explained variance vs an independent SVD of the centered matrix.
    Eigen::MatrixXd data(50, 8);
    for (Eigen::Index i = 0; i < 50; ++i)
        for (Eigen::Index j = 0; j < 8; ++j) data(i, j) = 2.0 * uniform01(rng) - 1.0;
    const PcaModel pca = fit_pca(data, 3);
    const Eigen::MatrixXd centered = data.rowwise() - data.colwise().mean();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered);
    for (int i = 0; i < 3; ++i) {
        const double expected =
            svd.singularValues()[i] * svd.singularValues()[i] / (data.rows() - 1.0);
        if (std::abs(pca.explained_variance[i] - expected) > 1e-8) {
            c.fail("PCA explained variance " + std::to_string(i) + " off the eigensolve oracle");
            return;
        }
    }

    // RF with a single unbagged full-feature tree predicts exactly like DT.
    std::vector<int> labels;
    for (int i = 0; i < 50; ++i) labels.push_back(static_cast<int>(uniform_below(rng, 3)));
    Eigen::MatrixXd train_x(50, 4);
    for (Eigen::Index i = 0; i < 50; ++i)
        for (Eigen::Index j = 0; j < 4; ++j) train_x(i, j) = 2.0 * uniform01(rng) - 1.0;
    TrainOptions options;
    options.forest.n_trees = 1;
    options.forest.bootstrap = false;
    options.forest.feature_subset = FeatureSubset::All;
    const TrainedModel rf = train(ModelKind::RF, train_x, labels, 42, options);
    const TrainedModel dt = train(ModelKind::DT, train_x, labels, 42);
    Eigen::MatrixXd probes(300, 4);
    for (Eigen::Index i = 0; i < 300; ++i)
        for (Eigen::Index j = 0; j < 4; ++j) probes(i, j) = 3.0 * (uniform01(rng) - 0.5);
    if (predict(rf, probes) != predict(dt, probes)) c.fail("RF(1 tree, no bootstrap) != DT");
}

void criterion_11_user_dataset() {
    const char* path = std::getenv("QSMOTE_CWRUBD_CSV");
    if (path == nullptr) {
        std::cout << "SKIP criterion 11: set QSMOTE_CWRUBD_CSV to a feature CSV to run the "
                     "end-to-end dataset check\n";
        return;
    }
    Criterion c(11, "user-supplied dataset: RF post-QSMOTE CV accuracy in [0.95, 1.0]");
    const LoadedCsv csv = load_csv(path);
    ExperimentConfig config;
    config.models = {ModelKind::RF};
    const ExperimentResult result = run_experiment(csv.data, config);
    for (const auto& agg : result.aggregates) {
        if (agg.model == ModelKind::RF && agg.phase == Phase::After && !agg.channel) {
            c.note(" | RF after = " + std::to_string(agg.accuracy_mean));
            if (agg.accuracy_mean < 0.95 || agg.accuracy_mean > 1.0)
                c.fail("RF after accuracy " + std::to_string(agg.accuracy_mean) +
                       " outside [0.95, 1.0]");
        }
    }
}

}  // namespace

int main() {
    criterion_1_swaptest_fidelity();
    criterion_2_eq8_closure();
    criterion_3_cptp_suite();
    criterion_4_channel_spot_values();
    criterion_5_qsmote_balance_geometry();
    criterion_6_directional_gain();
    criterion_7_metrics_oracle();
    criterion_8_noise_sweep_sanity();
    criterion_9_determinism();
    criterion_10_classifier_numerics();
    criterion_11_user_dataset();

    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criterion(s) failed\n";
    return 1;
}
