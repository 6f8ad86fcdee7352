#include "qsmote/cluster.hpp"

#include <limits>

#include "qsmote/errors.hpp"
#include "qsmote/rng.hpp"

namespace qsmote {

namespace {

double sq_dist(const Eigen::RowVectorXd& a, const Eigen::RowVectorXd& b) {
    return (a - b).squaredNorm();
}

// k-means++: first centroid uniform, the rest D^2-weighted.
Eigen::MatrixXd seed_centroids(const Eigen::MatrixXd& x, int k, Rng& rng) {
    const Eigen::Index n = x.rows();
    Eigen::MatrixXd centroids(k, x.cols());
    centroids.row(0) = x.row(static_cast<Eigen::Index>(uniform_below(rng, n)));

    Eigen::VectorXd d2(n);
    for (Eigen::Index i = 0; i < n; ++i) d2[i] = sq_dist(x.row(i), centroids.row(0));

    for (int c = 1; c < k; ++c) {
        const double total = d2.sum();
        Eigen::Index pick;
        if (total <= 0.0) {
            // All remaining mass at already-chosen points (duplicates); fall
            // back to a uniform draw.
            pick = static_cast<Eigen::Index>(uniform_below(rng, n));
        } else {
            const double target = uniform01(rng) * total;
            double cum = 0.0;
            pick = n - 1;
            for (Eigen::Index i = 0; i < n; ++i) {
                cum += d2[i];
                if (target < cum) {
                    pick = i;
                    break;
                }
            }
        }
        centroids.row(c) = x.row(pick);
        for (Eigen::Index i = 0; i < n; ++i)
            d2[i] = std::min(d2[i], sq_dist(x.row(i), centroids.row(c)));
    }
    return centroids;
}

int nearest(const Eigen::MatrixXd& centroids, const Eigen::RowVectorXd& p) {
    int best = 0;
    double best_d = sq_dist(p, centroids.row(0));
    for (int j = 1; j < centroids.rows(); ++j) {
        const double d = sq_dist(p, centroids.row(j));
        if (d < best_d) {
            best_d = d;
            best = j;
        }
    }
    return best;
}

}  // namespace

KMeansModel fit_kmeans(const Eigen::MatrixXd& x, int k, std::uint64_t seed, int max_iter,
                       double tol) {
    const Eigen::Index n = x.rows();
    if (n == 0 || x.cols() == 0) throw EmptyInput("k-means requires a non-empty matrix");
    if (k < 1) throw TooFewSamples("k must be at least 1");
    if (n < k)
        throw TooFewSamples("k-means needs at least k samples: n=" + std::to_string(n) +
                            ", k=" + std::to_string(k));

    Rng rng = make_rng(derive_seed(seed, 0x6b6d65616e73ULL));  // "kmeans" substream
    KMeansModel model;
    model.k = k;
    model.seed = seed;
    model.centroids = seed_centroids(x, k, rng);

    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    for (int iter = 0; iter < max_iter; ++iter) {
        // Assignment step.
        double inertia = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            assign[static_cast<std::size_t>(i)] = nearest(model.centroids, x.row(i));
            inertia += sq_dist(x.row(i), model.centroids.row(assign[static_cast<std::size_t>(i)]));
        }
        model.inertia = inertia;
        model.inertia_trace.push_back(inertia);
        model.n_iter_run = iter + 1;

        // Update step.
        Eigen::MatrixXd next = Eigen::MatrixXd::Zero(k, x.cols());
        std::vector<Eigen::Index> counts(static_cast<std::size_t>(k), 0);
        for (Eigen::Index i = 0; i < n; ++i) {
            next.row(assign[static_cast<std::size_t>(i)]) += x.row(i);
            ++counts[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])];
        }
        for (int j = 0; j < k; ++j) {
            if (counts[static_cast<std::size_t>(j)] > 0) {
                next.row(j) /= static_cast<double>(counts[static_cast<std::size_t>(j)]);
            } else {
                // Re-seed an empty cluster to the point farthest from its
                // currently assigned centroid.
                Eigen::Index far = 0;
                double far_d = -1.0;
                for (Eigen::Index i = 0; i < n; ++i) {
                    const double d =
                        sq_dist(x.row(i), model.centroids.row(assign[static_cast<std::size_t>(i)]));
                    if (d > far_d) {
                        far_d = d;
                        far = i;
                    }
                }
                next.row(j) = x.row(far);
            }
        }

        const double shift = (next - model.centroids).rowwise().norm().maxCoeff();
        model.centroids = next;
        if (shift < tol) break;
    }

    // Final inertia against the converged centroids.
    double inertia = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        inertia += sq_dist(x.row(i), model.centroids.row(nearest(model.centroids, x.row(i))));
    model.inertia = inertia;
    return model;
}

int predict_cluster(const KMeansModel& model, const Eigen::VectorXd& x) {
    if (x.size() != model.centroids.cols())
        throw DimensionMismatch("point dimension " + std::to_string(x.size()) +
                                " does not match centroid dimension " +
                                std::to_string(model.centroids.cols()));
    return nearest(model.centroids, x.transpose());
}

}  // namespace qsmote
