#include "qsmote/qsim.hpp"

#include <cmath>

#include "qsmote/errors.hpp"

namespace qsmote {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
    int k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

void check_qubit(const StateVector& state, int q) {
    if (q < 0 || q >= state.n_qubits)
        throw QubitOutOfRange("qubit index " + std::to_string(q) + " out of range for " +
                              std::to_string(state.n_qubits) + " qubits");
}

// Stride of qubit q under the MSB-first convention.
std::size_t stride_of(const StateVector& state, int q) {
    return std::size_t{1} << (state.n_qubits - 1 - q);
}

// Applies a 2x2 matrix on wire q by pairwise contraction, O(2^n).
StateVector apply_single(const StateVector& state, int q, const Complex u[2][2]) {
    check_qubit(state, q);
    StateVector out = state;
    const std::size_t step = stride_of(state, q);
    const std::size_t block = step << 1;
    for (std::size_t base = 0; base < out.dim(); base += block) {
        for (std::size_t off = 0; off < step; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + step;
            const Complex a = state.amplitudes[i0];
            const Complex b = state.amplitudes[i1];
            out.amplitudes[i0] = u[0][0] * a + u[0][1] * b;
            out.amplitudes[i1] = u[1][0] * a + u[1][1] * b;
        }
    }
    return out;
}

}  // namespace

StateVector init_state(const std::vector<Complex>& amplitudes) {
    if (!is_power_of_two(amplitudes.size()))
        throw NonPowerOfTwoLength("amplitude vector length " + std::to_string(amplitudes.size()) +
                                  " is not a power of two");
    double norm2 = 0.0;
    for (const Complex& a : amplitudes) norm2 += std::norm(a);
    if (norm2 < 1e-24) throw ZeroNorm("cannot initialize a state from an all-zero vector");

    StateVector state;
    state.n_qubits = log2_exact(amplitudes.size());
    state.amplitudes = amplitudes;
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& a : state.amplitudes) a *= inv;
    return state;
}

StateVector apply_hadamard(const StateVector& state, int q) {
    static const double s = 1.0 / std::sqrt(2.0);
    const Complex h[2][2] = {{s, s}, {s, -s}};
    return apply_single(state, q, h);
}

StateVector apply_u(const StateVector& state, int q, double theta, double phi, double lam) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const Complex u[2][2] = {
        {c, -std::exp(Complex(0.0, lam)) * s},
        {std::exp(Complex(0.0, phi)) * s, std::exp(Complex(0.0, phi + lam)) * c},
    };
    return apply_single(state, q, u);
}

StateVector apply_cswap(const StateVector& state, int control, int t1, int t2) {
    check_qubit(state, control);
    check_qubit(state, t1);
    check_qubit(state, t2);
    if (control == t1 || control == t2 || t1 == t2)
        throw DuplicateQubit("cswap requires three distinct qubits");

    StateVector out = state;
    const std::size_t c_bit = stride_of(state, control);
    const std::size_t b1 = stride_of(state, t1);
    const std::size_t b2 = stride_of(state, t2);
    for (std::size_t i = 0; i < out.dim(); ++i) {
        // Visit each swapped pair once: t1 bit set, t2 bit clear.
        if ((i & c_bit) && (i & b1) && !(i & b2)) {
            const std::size_t j = (i & ~b1) | b2;
            std::swap(out.amplitudes[i], out.amplitudes[j]);
        }
    }
    return out;
}

double prob_zero(const StateVector& state, int q) {
    check_qubit(state, q);
    const std::size_t bit = stride_of(state, q);
    double p0 = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i)
        if (!(i & bit)) p0 += std::norm(state.amplitudes[i]);
    return p0;
}

MeasurementTally measure_qubit(const StateVector& state, int q, int shots, Rng& rng) {
    const double p0 = prob_zero(state, q);
    MeasurementTally tally;
    tally.shots = shots;
    for (int s = 0; s < shots; ++s) {
        if (uniform01(rng) < p0)
            ++tally.count0;
        else
            ++tally.count1;
    }
    return tally;
}

DensityMatrix to_density(const StateVector& state) {
    const auto n = static_cast<Eigen::Index>(state.dim());
    DensityMatrix rho;
    rho.n_qubits = state.n_qubits;
    rho.matrix.resize(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c)
            rho.matrix(r, c) = state.amplitudes[r] * std::conj(state.amplitudes[c]);
    return rho;
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
    StateVector out;
    out.n_qubits = a.n_qubits + b.n_qubits;
    out.amplitudes.resize(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            out.amplitudes[i * b.dim() + j] = a.amplitudes[i] * b.amplitudes[j];
    return out;
}

bool is_hermitian(const DensityMatrix& rho, double tol) {
    return (rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double trace_deviation(const DensityMatrix& rho) {
    return std::abs(rho.matrix.trace() - Complex(1.0, 0.0));
}

double min_eigenvalue(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix);
    return solver.eigenvalues().minCoeff();
}

}  // namespace qsmote
