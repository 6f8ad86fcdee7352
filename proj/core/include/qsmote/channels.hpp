#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qsmote/qsim.hpp"

namespace qsmote {

enum class ChannelKind {
    BitFlip,
    PhaseFlip,
    BitPhaseFlip,
    Depolarizing,
    AmplitudeDamping,
    PhaseDamping,
};

inline constexpr ChannelKind kAllChannelKinds[] = {
    ChannelKind::BitFlip,          ChannelKind::PhaseFlip,    ChannelKind::BitPhaseFlip,
    ChannelKind::Depolarizing,     ChannelKind::AmplitudeDamping,
    ChannelKind::PhaseDamping,
};

std::string channel_name(ChannelKind kind);
ChannelKind channel_from_name(const std::string& name);  // throws ConfigError

// Single-qubit noise channel with probability parameter p in [0, 1].
struct NoiseChannel {
    ChannelKind kind;
    double p;
};

NoiseChannel make_channel(ChannelKind kind, double p);  // throws ConfigError on bad p

// Kraus operators {E_i}; a valid set satisfies sum E_i^dag E_i = I.
struct KrausSet {
    std::vector<Eigen::Matrix2cd> operators;
};

KrausSet kraus_operators(const NoiseChannel& channel);

// Largest |entry| of sum E_i^dag E_i - I; < 1e-12 for all six channels.
double completeness_residual(const KrausSet& kraus);

// zeta = sum E_i rho E_i^dag on a single-qubit density matrix.
// Throws DimensionMismatch unless rho is 2x2.
DensityMatrix apply_channel(const DensityMatrix& rho, const NoiseChannel& channel);

// Per-feature min/max computed on training data; the corruption transform
// scales against these and therefore never leaks test statistics.
struct FeatureBounds {
    Eigen::VectorXd min;
    Eigen::VectorXd max;
};

FeatureBounds compute_bounds(const Eigen::MatrixXd& x_train);

// Deterministic structured corruption of a feature matrix. Each cell is
// min-max scaled to xs in [0, 1] (clamped), angle-encoded on one qubit as
// theta = xs * pi, pushed through the channel, and decoded from the Bloch
// plane as theta' = atan2(|<X>'|, <Z>') with atan2(0, 0) defined as pi/2.
// p == 0 returns the input bit-identically. Throws BoundsLengthMismatch.
Eigen::MatrixXd corrupt_features(const Eigen::MatrixXd& x, const NoiseChannel& channel,
                                 const FeatureBounds& bounds);

}  // namespace qsmote
