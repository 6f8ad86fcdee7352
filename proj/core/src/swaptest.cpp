#include "qsmote/swaptest.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qsmote/errors.hpp"
#include "qsmote/qsim.hpp"

namespace qsmote {

namespace {

constexpr double kMinNorm = 1e-12;

void check_pair(const Eigen::VectorXd& c, const Eigen::VectorXd& m) {
    if (c.size() != m.size())
        throw LengthMismatch("vector lengths differ: " + std::to_string(c.size()) + " vs " +
                             std::to_string(m.size()));
    if (c.norm() < kMinNorm || m.norm() < kMinNorm)
        throw ZeroNormVector("swap test requires nonzero-norm vectors");
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

double clip(double v, double lo, double hi) { return std::min(hi, std::max(lo, v)); }

}  // namespace

OverlapEstimate overlap_analytic(const Eigen::VectorXd& c, const Eigen::VectorXd& m) {
    check_pair(c, m);
    // Scalar accumulation instead of Eigen's vectorized reductions: trailing
    // zero padding then changes nothing, bit for bit.
    double dot = 0.0;
    double nc2 = 0.0;
    double nm2 = 0.0;
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        dot += c[i] * m[i];
        nc2 += c[i] * c[i];
        nm2 += m[i] * m[i];
    }
    const double nc = std::sqrt(nc2);
    const double nm = std::sqrt(nm2);
    const double z = nc * nc + nm * nm;

    OverlapEstimate est;
    est.z_norm = z;
    est.shots = 0;
    est.inner_product = clip(dot / (nc * nm), -1.0, 1.0);
    est.angle = std::acos(est.inner_product);
    est.p0 = (3.0 - 2.0 * nc * nm * est.inner_product / z) / 4.0;
    return est;
}

OverlapEstimate estimate_angle_sampled(const Eigen::VectorXd& c, const Eigen::VectorXd& m,
                                       int shots, Rng& rng) {
    check_pair(c, m);
    const double nc = c.norm();
    const double nm = m.norm();
    const double z = nc * nc + nm * nm;

    // Zero-pad both vectors to the next power of two; padded entries do not
    // change dot products or norms.
    const std::size_t d = next_pow2(static_cast<std::size_t>(c.size()));
    std::vector<Complex> psi(2 * d, Complex(0.0, 0.0));
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        psi[static_cast<std::size_t>(i)] = Complex(c[i] / nc, 0.0);
        psi[d + static_cast<std::size_t>(i)] = Complex(m[i] / nm, 0.0);
    }

    // Ancilla and rotation wires, then the concatenated register.
    StateVector front = init_state({Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0),
                                    Complex(0.0, 0.0)});
    front = apply_hadamard(front, 0);
    front = apply_u(front, 1, 2.0 * std::atan(nm / nc), std::numbers::pi, 0.0);

    StateVector circuit = tensor_product(front, init_state(psi));
    circuit = apply_cswap(circuit, 0, 1, 2);
    circuit = apply_hadamard(circuit, 0);

    const MeasurementTally tally = measure_qubit(circuit, 0, shots, rng);
    const double p0 = static_cast<double>(tally.count0) / static_cast<double>(shots);

    OverlapEstimate est;
    est.z_norm = z;
    est.shots = shots;
    est.p0 = p0;
    est.inner_product = clip((3.0 - 4.0 * p0) * z / (2.0 * nc * nm), -1.0, 1.0);
    est.angle = std::acos(est.inner_product);
    return est;
}

}  // namespace qsmote
