#pragma once

#include "mvsbm/error.hpp"
#include "mvsbm/rng.hpp"

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <vector>

namespace mvsbm {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
struct EigenPair {
    Vector<Scalar> vector;
    Scalar value = 0;
    int iterations = 0;
    bool converged = false;
};

/// Power iteration for x -> apply(x) restricted to the orthogonal complement
/// of the all-ones vector. Stops after `max_iters` steps or once successive
/// Rayleigh quotients differ by less than `tol`. The returned vector has unit
/// norm and zero mean, or is all zero when the operator annihilates it.
template <typename Scalar, typename Apply>
EigenPair<Scalar> deflated_power_iteration(Apply&& apply, Vector<Scalar> start, int max_iters, Scalar tol)
{
    EigenPair<Scalar> out;
    Vector<Scalar> x = std::move(start);
    x.array() -= x.mean();
    Scalar norm = x.norm();
    if (norm == Scalar(0)) {
        out.vector = Vector<Scalar>::Zero(x.size());
        return out;
    }
    x /= norm;
    Scalar previous = std::numeric_limits<Scalar>::quiet_NaN();
    for (int it = 1; it <= max_iters; ++it) {
        Vector<Scalar> y = apply(x);
        y.array() -= y.mean();
        const Scalar rayleigh = x.dot(y);
        norm = y.norm();
        out.iterations = it;
        out.value = rayleigh;
        if (norm == Scalar(0)) {
            out.vector = Vector<Scalar>::Zero(x.size());
            return out;
        }
        x = y / norm;
        if (std::abs(rayleigh - previous) < tol) {
            out.converged = true;
            break;
        }
        previous = rayleigh;
    }
    out.vector = std::move(x);
    return out;
}

/// Eigenvectors of a dense symmetric matrix for its `count` algebraically
/// largest eigenvalues, as columns in decreasing eigenvalue order.
template <typename Derived>
Matrix<typename Derived::Scalar> top_eigenvectors(const Eigen::MatrixBase<Derived>& symmetric, int count)
{
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = symmetric.rows();
    if (count < 0 || count > n)
        throw InvalidParameter("top_eigenvectors: count outside [0, n]");
    Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(symmetric.derived());
    if (solver.info() != Eigen::Success)
        throw DegenerateStatistics("top_eigenvectors: eigen decomposition failed");
    Matrix<Scalar> out(n, count);
    for (int c = 0; c < count; ++c)
        out.col(c) = solver.eigenvectors().col(n - 1 - c);
    return out;
}

/// P M P with P the projector onto the complement of the all-ones vector.
template <typename Derived>
Matrix<typename Derived::Scalar> project_out_ones(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    const Vector<Scalar> row_means = m.rowwise().mean();
    const Vector<Scalar> col_means = m.colwise().mean().transpose();
    const Scalar grand = m.mean();
    Matrix<Scalar> out = m;
    out.colwise() -= row_means;
    out.rowwise() -= col_means.transpose();
    out.array() += grand;
    return out;
}

struct KMeansResult {
    std::vector<int> labels;  // 0-based cluster index per row
    double inertia = 0.0;
};

/// Lloyd's algorithm with k-means++ seeding on the rows of `points`; the
/// lowest-inertia result over `restarts` runs is returned.
template <typename Derived>
KMeansResult kmeans(const Eigen::MatrixBase<Derived>& points, int k, int restarts, Rng& rng, int max_iters = 100)
{
    using Scalar = typename Derived::Scalar;
    const auto n = static_cast<int>(points.rows());
    if (k < 1 || k > n)
        throw InvalidParameter("kmeans: need 1 <= k <= number of points");
    if (restarts < 1)
        throw InvalidParameter("kmeans: need at least one restart");
    const Matrix<Scalar> x = points;

    KMeansResult best;
    best.inertia = std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r) {
        Matrix<Scalar> centers(k, x.cols());
        centers.row(0) = x.row(static_cast<Eigen::Index>(rng.uniform_int(static_cast<std::uint64_t>(n))));
        Vector<Scalar> dist2 = (x.rowwise() - centers.row(0)).rowwise().squaredNorm();
        for (int c = 1; c < k; ++c) {
            const Scalar total = dist2.sum();
            int pick = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n)));
            if (total > Scalar(0)) {
                Scalar target = static_cast<Scalar>(rng.uniform()) * total;
                for (int i = 0; i < n; ++i) {
                    target -= dist2[i];
                    if (target <= Scalar(0)) {
                        pick = i;
                        break;
                    }
                }
            }
            centers.row(c) = x.row(pick);
            dist2 = dist2.cwiseMin((x.rowwise() - centers.row(c)).rowwise().squaredNorm());
        }

        std::vector<int> labels(static_cast<std::size_t>(n), -1);
        double inertia = 0.0;
        for (int it = 0; it < max_iters; ++it) {
            bool changed = false;
            inertia = 0.0;
            for (int i = 0; i < n; ++i) {
                Eigen::Index arg = 0;
                const Scalar d = (centers.rowwise() - x.row(i)).rowwise().squaredNorm().minCoeff(&arg);
                inertia += static_cast<double>(d);
                if (labels[static_cast<std::size_t>(i)] != static_cast<int>(arg)) {
                    labels[static_cast<std::size_t>(i)] = static_cast<int>(arg);
                    changed = true;
                }
            }
            if (!changed)
                break;
            Matrix<Scalar> sums = Matrix<Scalar>::Zero(k, x.cols());
            std::vector<int> counts(static_cast<std::size_t>(k), 0);
            for (int i = 0; i < n; ++i) {
                sums.row(labels[static_cast<std::size_t>(i)]) += x.row(i);
                ++counts[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])];
            }
            for (int c = 0; c < k; ++c) {
                if (counts[static_cast<std::size_t>(c)] > 0)
                    centers.row(c) = sums.row(c) / static_cast<Scalar>(counts[static_cast<std::size_t>(c)]);
                else  // empty cluster: reseed at a random point
                    centers.row(c) = x.row(static_cast<Eigen::Index>(rng.uniform_int(static_cast<std::uint64_t>(n))));
            }
        }
        if (inertia < best.inertia) {
            best.inertia = inertia;
            best.labels = std::move(labels);
        }
    }
    return best;
}

}  // namespace mvsbm
