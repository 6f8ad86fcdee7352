#include "qsmote/channels.hpp"

#include <cmath>
#include <numbers>

#include "qsmote/errors.hpp"

namespace qsmote {

namespace {

using Eigen::Matrix2cd;

const Complex kI(0.0, 1.0);

Matrix2cd pauli_x() { return (Matrix2cd() << 0, 1, 1, 0).finished(); }
Matrix2cd pauli_y() { return (Matrix2cd() << 0, -kI, kI, 0).finished(); }
Matrix2cd pauli_z() { return (Matrix2cd() << 1, 0, 0, -1).finished(); }

}  // namespace

std::string channel_name(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::BitFlip: return "bit_flip";
        case ChannelKind::PhaseFlip: return "phase_flip";
        case ChannelKind::BitPhaseFlip: return "bit_phase_flip";
        case ChannelKind::Depolarizing: return "depolarizing";
        case ChannelKind::AmplitudeDamping: return "amplitude_damping";
        case ChannelKind::PhaseDamping: return "phase_damping";
    }
    throw InternalError("unreachable channel kind");
}

ChannelKind channel_from_name(const std::string& name) {
    for (ChannelKind kind : kAllChannelKinds)
        if (channel_name(kind) == name) return kind;
    throw ConfigError("unknown noise channel '" + name +
                      "' (expected one of bit_flip, phase_flip, bit_phase_flip, "
                      "depolarizing, amplitude_damping, phase_damping)");
}

NoiseChannel make_channel(ChannelKind kind, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw ConfigError("channel probability must lie in [0, 1], got " + std::to_string(p));
    return NoiseChannel{kind, p};
}

KrausSet kraus_operators(const NoiseChannel& channel) {
    const double p = channel.p;
    const Matrix2cd id = Matrix2cd::Identity();
    KrausSet set;
    switch (channel.kind) {
        case ChannelKind::BitFlip:
            set.operators = {std::sqrt(1.0 - p) * id, std::sqrt(p) * pauli_x()};
            break;
        case ChannelKind::PhaseFlip:
            set.operators = {std::sqrt(1.0 - p) * id, std::sqrt(p) * pauli_z()};
            break;
        case ChannelKind::BitPhaseFlip:
            set.operators = {std::sqrt(1.0 - p) * id, std::sqrt(p) * pauli_y()};
            break;
        case ChannelKind::Depolarizing:
            set.operators = {std::sqrt(1.0 - p) * id, std::sqrt(p / 3.0) * pauli_x(),
                             std::sqrt(p / 3.0) * pauli_y(), std::sqrt(p / 3.0) * pauli_z()};
            break;
        case ChannelKind::AmplitudeDamping: {
            Matrix2cd e0 = Matrix2cd::Zero();
            e0(0, 0) = 1.0;
            e0(1, 1) = std::sqrt(1.0 - p);
            Matrix2cd e1 = Matrix2cd::Zero();
            e1(0, 1) = std::sqrt(p);
            set.operators = {e0, e1};
            break;
        }
        case ChannelKind::PhaseDamping: {
            Matrix2cd e0 = Matrix2cd::Zero();
            e0(0, 0) = 1.0;
            e0(1, 1) = std::sqrt(1.0 - p);
            Matrix2cd e1 = Matrix2cd::Zero();
            e1(1, 1) = std::sqrt(p);
            set.operators = {e0, e1};
            break;
        }
    }
    return set;
}

double completeness_residual(const KrausSet& kraus) {
    Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
    for (const auto& e : kraus.operators) sum += e.adjoint() * e;
    return (sum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
}

DensityMatrix apply_channel(const DensityMatrix& rho, const NoiseChannel& channel) {
    if (rho.matrix.rows() != 2 || rho.matrix.cols() != 2)
        throw DimensionMismatch("apply_channel expects a single-qubit (2x2) density matrix");

    const KrausSet kraus = kraus_operators(channel);
    Eigen::Matrix2cd zeta = Eigen::Matrix2cd::Zero();
    for (const auto& e : kraus.operators) zeta += e * rho.matrix * e.adjoint();

    DensityMatrix out;
    out.n_qubits = 1;
    out.matrix = zeta;
    return out;
}

FeatureBounds compute_bounds(const Eigen::MatrixXd& x_train) {
    FeatureBounds bounds;
    bounds.min = x_train.colwise().minCoeff();
    bounds.max = x_train.colwise().maxCoeff();
    return bounds;
}

Eigen::MatrixXd corrupt_features(const Eigen::MatrixXd& x, const NoiseChannel& channel,
                                 const FeatureBounds& bounds) {
    if (bounds.min.size() != x.cols() || bounds.max.size() != x.cols())
        throw BoundsLengthMismatch("bounds dimension " + std::to_string(bounds.min.size()) +
                                   " does not match feature count " + std::to_string(x.cols()));

    // Every channel is exactly the identity at p == 0; short-circuiting keeps
    // clean evaluations bit-identical instead of atan2-roundtrip-identical.
    if (channel.p == 0.0) return x;

    const KrausSet kraus = kraus_operators(channel);
    Eigen::MatrixXd out = x;
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        const double lo = bounds.min[j];
        const double hi = bounds.max[j];
        if (!(lo < hi)) continue;  // constant feature: nothing to corrupt
        const double span = hi - lo;
        for (Eigen::Index i = 0; i < x.rows(); ++i) {
            double xs = (x(i, j) - lo) / span;
            xs = std::min(1.0, std::max(0.0, xs));
            const double theta = xs * std::numbers::pi;

            // rho = (I + sin(theta) X + cos(theta) Z) / 2
            Eigen::Matrix2cd rho;
            rho(0, 0) = 0.5 * (1.0 + std::cos(theta));
            rho(1, 1) = 0.5 * (1.0 - std::cos(theta));
            rho(0, 1) = 0.5 * std::sin(theta);
            rho(1, 0) = 0.5 * std::sin(theta);

            Eigen::Matrix2cd zeta = Eigen::Matrix2cd::Zero();
            for (const auto& e : kraus.operators) zeta += e * rho * e.adjoint();

            double exp_x = 2.0 * zeta(1, 0).real();
            double exp_z = zeta(0, 0).real() - zeta(1, 1).real();
            // Bloch components live in [-1, 1]; anything below accumulation
            // noise is an exact zero for the tie-break below.
            if (std::abs(exp_x) < 1e-14) exp_x = 0.0;
            if (std::abs(exp_z) < 1e-14) exp_z = 0.0;

            double theta_out;
            if (exp_x == 0.0 && exp_z == 0.0)
                theta_out = std::numbers::pi / 2.0;  // fully depolarized
            else
                theta_out = std::atan2(std::abs(exp_x), exp_z);

            out(i, j) = lo + (theta_out / std::numbers::pi) * span;
        }
    }
    return out;
}

}  // namespace qsmote
