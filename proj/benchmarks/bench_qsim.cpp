#include <benchmark/benchmark.h>

#include "qsmote/qsim.hpp"
#include "qsmote/swaptest.hpp"

namespace {

using namespace qsmote;

StateVector random_state(int n_qubits, Rng& rng) {
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    for (auto& a : amps) a = Complex(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);
    return init_state(amps);
}

void bm_hadamard(benchmark::State& state) {
    Rng rng = make_rng(1);
    const StateVector s = random_state(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(apply_hadamard(s, 0));
}
BENCHMARK(bm_hadamard)->Arg(4)->Arg(8)->Arg(12);

void bm_cswap(benchmark::State& state) {
    Rng rng = make_rng(2);
    const StateVector s = random_state(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(apply_cswap(s, 0, 1, 2));
}
BENCHMARK(bm_cswap)->Arg(4)->Arg(8)->Arg(12);

void bm_measure_1000_shots(benchmark::State& state) {
    Rng rng = make_rng(3);
    const StateVector s = random_state(6, rng);
    for (auto _ : state) benchmark::DoNotOptimize(measure_qubit(s, 0, 1000, rng));
}
BENCHMARK(bm_measure_1000_shots);

void bm_overlap_analytic(benchmark::State& state) {
    Rng rng = make_rng(4);
    const auto d = static_cast<Eigen::Index>(state.range(0));
    Eigen::VectorXd c(d), m(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        c[i] = uniform01(rng) - 0.5;
        m[i] = uniform01(rng) - 0.5;
    }
    for (auto _ : state) benchmark::DoNotOptimize(overlap_analytic(c, m));
}
BENCHMARK(bm_overlap_analytic)->Arg(8)->Arg(32)->Arg(128);

void bm_swaptest_sampled(benchmark::State& state) {
    Rng rng = make_rng(5);
    const auto d = static_cast<Eigen::Index>(state.range(0));
    Eigen::VectorXd c(d), m(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        c[i] = uniform01(rng) - 0.5;
        m[i] = uniform01(rng) - 0.5;
    }
    for (auto _ : state) benchmark::DoNotOptimize(estimate_angle_sampled(c, m, 1000, rng));
}
BENCHMARK(bm_swaptest_sampled)->Arg(8)->Arg(32);

}  // namespace
