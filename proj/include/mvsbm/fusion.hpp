#pragma once

#include "mvsbm/estimators.hpp"
#include "mvsbm/graph.hpp"
#include "mvsbm/labels.hpp"
#include "mvsbm/rng.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace mvsbm {

/// B = sum of the per-view estimates.
template <typename Scalar>
struct BasicScoreMatrix {
    Matrix<Scalar> values;
    int t = 0;

    int n() const { return static_cast<int>(values.rows()); }
};

using ScoreMatrix = BasicScoreMatrix<double>;

/// Running sum of estimates; lets callers drop each estimate after adding it.
class ScoreAccumulator {
public:
    void add(const PairwiseEstimate& estimate);
    int t() const { return scores_.t; }
    const ScoreMatrix& scores() const { return scores_; }
    ScoreMatrix take() { return std::move(scores_); }

private:
    ScoreMatrix scores_;
};

/// Throws InvalidInput on an empty list or mismatched sizes.
ScoreMatrix accumulate_scores(std::span<const PairwiseEstimate> estimates);

/// Binary n x n matrix stored as bit-packed rows.
class NeighborhoodMatrix {
public:
    NeighborhoodMatrix() = default;
    /// All-zero matrix. `out_degree` records the per-row target count of the
    /// top-k construction; it is 0 for matrices built any other way.
    explicit NeighborhoodMatrix(int n, int out_degree = 0);

    template <typename Derived>
    static NeighborhoodMatrix from_dense(const Eigen::MatrixBase<Derived>& m)
    {
        if (m.rows() != m.cols())
            throw InvalidInput("NeighborhoodMatrix: matrix is not square");
        NeighborhoodMatrix out(static_cast<int>(m.rows()));
        for (int i = 0; i < out.n(); ++i)
            for (int j = 0; j < out.n(); ++j)
                out.set(i, j, m(i, j) != 0);
        return out;
    }

    int n() const { return n_; }
    int out_degree() const { return out_degree_; }

    bool operator()(int i, int j) const
    {
        return (bits_[word(i, j)] >> (static_cast<unsigned>(j) & 63U)) & 1U;
    }
    void set(int i, int j, bool value = true);
    void flip(int i, int j) { set(i, j, !(*this)(i, j)); }

    /// Number of ones in row i.
    int row_count(int i) const;
    /// ||A_i - A_j||^2, which is the Hamming distance for binary rows.
    int row_distance(int i, int j) const;
    /// ||A_i - B_i||^2 for a matrix of the same size.
    int row_distance(int i, const NeighborhoodMatrix& other, int j) const;

    template <typename Scalar = double>
    Matrix<Scalar> to_dense() const
    {
        Matrix<Scalar> m(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                m(i, j) = (*this)(i, j) ? Scalar(1) : Scalar(0);
        return m;
    }

    bool operator==(const NeighborhoodMatrix& other) const { return n_ == other.n_ && bits_ == other.bits_; }

private:
    std::size_t word(int i, int j) const
    {
        return static_cast<std::size_t>(i) * words_per_row_ + (static_cast<std::size_t>(j) >> 6U);
    }

    int n_ = 0;
    int out_degree_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// round(n / k), capped at n - 1.
int neighborhood_size(int n, int k);

/// Row i gets ones at its neighborhood_size(n, k) highest-scoring columns
/// j != i (ties to the smaller index) and at the diagonal.
NeighborhoodMatrix build_topk_graph(const ScoreMatrix& scores, int k);

/// A*(z): ones exactly where z_i = z_j, diagonal included.
NeighborhoodMatrix community_matrix(const LabelVector& z);

/// Pivot rounding: for p = 1..k a uniform unassigned pivot claims every
/// unassigned row within squared distance n/k; leftovers get uniform labels.
LabelVector second_moment_rounding(const NeighborhoodMatrix& a, int k, Rng& rng);

struct FusionConfig {
    double c_bar = 1.0;
    double q = 0.1;

    void validate() const;
};

/// Indices i with ||A_i - A*(z)_i||^2 <= n exp(-q c_bar^2 t).
std::vector<int> representative_rows(const NeighborhoodMatrix& a, const LabelVector& z, double q, double c_bar, int t);

using EstimateObserver = std::function<void(int view, const PairwiseEstimate&)>;

/// Estimates every view with estimate_pairwise (view l uses rng.split(l)),
/// sums, builds the top-k graph and rounds it. `observer`, if set, sees
/// each estimate before it is folded into the score matrix.
LabelVector late_fusion_cluster(std::span<const Graph> graphs, std::span<const ViewParams> view_params, int k,
                                const EstimatorConfig& cfg, Rng& rng, const EstimateObserver& observer = {});

/// The same pipeline starting from precomputed estimates.
LabelVector late_fusion_from_estimates(std::span<const PairwiseEstimate> estimates, int k, Rng& rng);

}  // namespace mvsbm
