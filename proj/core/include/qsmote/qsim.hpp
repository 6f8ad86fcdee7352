#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qsmote/rng.hpp"

namespace qsmote {

using Complex = std::complex<double>;

// Dense n-qubit state. Bit convention, fixed once for the whole toolkit:
// qubit 0 is the leftmost (most significant) position in a basis-state
// label, so basis index i assigns qubit q the bit (i >> (n_qubits-1-q)) & 1.
// |amplitudes| == 2^n_qubits and the L2 norm is 1 (within 1e-9).
struct StateVector {
    int n_qubits = 0;
    std::vector<Complex> amplitudes;

    std::size_t dim() const { return amplitudes.size(); }
};

// Dense density matrix of dimension 2^n_qubits. Valid instances are
// Hermitian, unit-trace, and positive semidefinite up to numerical noise.
struct DensityMatrix {
    int n_qubits = 0;
    Eigen::MatrixXcd matrix;
};

// Outcome counts of repeated single-qubit Z measurements.
struct MeasurementTally {
    int shots = 0;
    long long count0 = 0;
    long long count1 = 0;
};

// Builds a state from raw amplitudes. The length must be a power of two and
// the norm nonzero; amplitudes are renormalized to exactly unit norm.
// Throws NonPowerOfTwoLength, ZeroNorm.
StateVector init_state(const std::vector<Complex>& amplitudes);

// Single-qubit Hadamard on wire q. Throws QubitOutOfRange.
StateVector apply_hadamard(const StateVector& state, int q);

// Generic single-qubit rotation
//   u(theta, phi, lam) = [[cos(t/2),            -e^{i lam} sin(t/2)],
//                         [e^{i phi} sin(t/2),   e^{i(phi+lam)} cos(t/2)]]
// applied on wire q. Throws QubitOutOfRange.
StateVector apply_u(const StateVector& state, int q, double theta, double phi, double lam);

// Controlled-SWAP: basis states whose control bit is 1 get bits t1 and t2
// exchanged. Throws QubitOutOfRange, DuplicateQubit.
StateVector apply_cswap(const StateVector& state, int control, int t1, int t2);

// Analytic probability of reading 0 on wire q.
double prob_zero(const StateVector& state, int q);

// Samples `shots` independent Z measurements of wire q. Non-destructive:
// the state is not collapsed, only tallied. Deterministic given the rng.
MeasurementTally measure_qubit(const StateVector& state, int q, int shots, Rng& rng);

// Outer product |s><s|.
DensityMatrix to_density(const StateVector& state);

// Tensor product; qubits of `a` come first (more significant).
StateVector tensor_product(const StateVector& a, const StateVector& b);

// Validity probes used by tests and the channel CPTP report.
bool is_hermitian(const DensityMatrix& rho, double tol = 1e-9);
double trace_deviation(const DensityMatrix& rho);
double min_eigenvalue(const DensityMatrix& rho);

}  // namespace qsmote
