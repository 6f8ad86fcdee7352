#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace qsmote {

struct KMeansModel {
    int k = 0;
    Eigen::MatrixXd centroids;  // k x d
    std::uint64_t seed = 0;
    int n_iter_run = 0;
    double inertia = 0.0;                // sum of squared distances to assigned centroids
    std::vector<double> inertia_trace;   // per-iteration objective, non-increasing
};

// Lloyd's algorithm with k-means++ seeding. Stops when the largest centroid
// shift drops below tol or max_iter is reached. Empty clusters are re-seeded
// to the point farthest from its current centroid. Deterministic given seed.
// Throws TooFewSamples (n < k), EmptyInput.
KMeansModel fit_kmeans(const Eigen::MatrixXd& x, int k, std::uint64_t seed, int max_iter = 300,
                       double tol = 1e-6);

// argmin_j ||x - centroid_j||, ties broken by lowest index.
// Throws DimensionMismatch.
int predict_cluster(const KMeansModel& model, const Eigen::VectorXd& x);

}  // namespace qsmote
