#pragma once

#include <Eigen/Dense>

#include "qsmote/rng.hpp"

namespace qsmote {

// Result of one overlap estimation between two real feature vectors c and m.
// inner_product is the normalized overlap <M|C> = (c.m)/(|c||m|), clipped to
// [-1, 1]; angle = arccos(inner_product); z_norm = |c|^2 + |m|^2. shots == 0
// marks the analytic path, in which p0 is back-filled from the overlap via
//   p0 = (3 - 2 |c||m| s / Z) / 4.
struct OverlapEstimate {
    double p0 = 0.0;
    double inner_product = 0.0;
    double angle = 0.0;
    int shots = 0;
    double z_norm = 0.0;
};

// Exact overlap from the dot product; no circuit, no sampling.
// Throws LengthMismatch, ZeroNormVector.
OverlapEstimate overlap_analytic(const Eigen::VectorXd& c, const Eigen::VectorXd& m);

// Shot-based estimate through the compact swap test circuit:
//   H(ancilla); u(2 atan(|m|/|c|), pi, 0) on wire 1; [c/|c|; m/|m|]/sqrt(2)
//   on wires 2..n-1; CSWAP(0; 1, 2); H(ancilla); measure the ancilla.
// The estimated overlap is (3 - 4 p0) Z / (2 |c||m|), clipped to [-1, 1].
// Vectors are zero-padded to the next power of two, which preserves the
// overlap exactly. Throws LengthMismatch, ZeroNormVector.
OverlapEstimate estimate_angle_sampled(const Eigen::VectorXd& c, const Eigen::VectorXd& m,
                                       int shots, Rng& rng);

}  // namespace qsmote
