#include <benchmark/benchmark.h>

#include "qsmote/channels.hpp"
#include "qsmote/cluster.hpp"
#include "qsmote/csv.hpp"
#include "qsmote/eval.hpp"
#include "qsmote/qsmote.hpp"

namespace {

using namespace qsmote;

const LoadedCsv& fixture() {
    static const LoadedCsv csv = load_csv(std::string(QSMOTE_SOURCE_DIR) + "/data/blobs4.csv");
    return csv;
}

void bm_kmeans_fit(benchmark::State& state) {
    const Eigen::MatrixXd& x = fixture().data.x;
    for (auto _ : state) benchmark::DoNotOptimize(fit_kmeans(x, 4, 42));
}
BENCHMARK(bm_kmeans_fit);

void bm_oversample_analytic(benchmark::State& state) {
    LabeledDataset data = fixture().data;
    data.x = transform(fit_scaler(data.x), data.x);
    OversampleConfig config;
    config.minority_labels = {1, 2, 3};
    for (auto _ : state) benchmark::DoNotOptimize(oversample(data, config));
}
BENCHMARK(bm_oversample_analytic);

void bm_corrupt_features(benchmark::State& state) {
    const Eigen::MatrixXd& x = fixture().data.x;
    const FeatureBounds bounds = compute_bounds(x);
    const NoiseChannel channel = make_channel(ChannelKind::AmplitudeDamping, 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(corrupt_features(x, channel, bounds));
}
BENCHMARK(bm_corrupt_features);

void bm_train_model(benchmark::State& state) {
    const LabeledDataset& data = fixture().data;
    const ModelKind kind = static_cast<ModelKind>(state.range(0));
    TrainOptions options;
    options.forest.n_trees = 50;
    for (auto _ : state) benchmark::DoNotOptimize(train(kind, data.x, data.y, 42, options));
}
BENCHMARK(bm_train_model)
    ->Arg(static_cast<int>(ModelKind::LR))
    ->Arg(static_cast<int>(ModelKind::RF))
    ->Arg(static_cast<int>(ModelKind::SVM))
    ->Arg(static_cast<int>(ModelKind::NB))
    ->Arg(static_cast<int>(ModelKind::DT));

void bm_full_clean_experiment(benchmark::State& state) {
    ExperimentConfig config;
    config.models = {ModelKind::NB, ModelKind::DT};
    for (auto _ : state) benchmark::DoNotOptimize(run_experiment(fixture().data, config));
}
BENCHMARK(bm_full_clean_experiment)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
