#pragma once

#include "mvsbm/graph.hpp"
#include "mvsbm/labels.hpp"
#include "mvsbm/rng.hpp"
#include "mvsbm/spectral.hpp"

#include <Eigen/Core>

#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace mvsbm {

/// Symmetric n x n estimate of x x^T with entries in [-1, +1]. The diagonal
/// is stored but carries no information.
template <typename Scalar>
class BasicPairwiseEstimate {
public:
    using MatrixType = Matrix<Scalar>;

    BasicPairwiseEstimate() = default;

    /// Throws InvalidInput unless `values` is square, exactly symmetric and
    /// bounded by one in absolute value.
    explicit BasicPairwiseEstimate(MatrixType values, bool degenerate = false)
        : values_(std::move(values)), degenerate_(degenerate)
    {
        if (values_.rows() != values_.cols())
            throw InvalidInput("PairwiseEstimate: matrix is not square");
        if (!is_valid(values_))
            throw InvalidInput("PairwiseEstimate: matrix must be symmetric with entries in [-1, 1]");
    }

    static BasicPairwiseEstimate zeros(int n, bool degenerate = false)
    {
        return BasicPairwiseEstimate(MatrixType::Zero(n, n), degenerate);
    }

    int n() const { return static_cast<int>(values_.rows()); }
    const MatrixType& values() const { return values_; }
    Scalar operator()(int i, int j) const { return values_(i, j); }

    /// Set when the estimator saw no signal at all (for instance, no edges).
    bool degenerate() const { return degenerate_; }

    template <typename Derived>
    static bool is_valid(const Eigen::MatrixBase<Derived>& m)
    {
        return m.rows() == m.cols() && m.cwiseAbs().maxCoeff() <= Scalar(1) && m == m.transpose();
    }

private:
    MatrixType values_;
    bool degenerate_ = false;
};

using PairwiseEstimate = BasicPairwiseEstimate<double>;

enum class EstimatorMethod { combined, degree_product, spectral, louvain };

struct EstimatorConfig {
    /// Balance threshold mu'; the probe dispatches on (3 mu' / 4)^2.
    double mu_prime = 0.05;
    /// Truncation multiplier of the degree-product estimator.
    double c_tilde = 10.0;
    int power_iters = 200;
    double power_tol = 1e-9;
    EstimatorMethod method = EstimatorMethod::combined;

    void validate() const;
};

struct CorrelationEstimate {
    double c_hat = 0.0;
    double std_error = 0.0;
    int trials = 0;
    long long same_pairs = 0;
    long long diff_pairs = 0;
};

// ---------------------------------------------------------------------------
// Degree-product estimator (for views with a clearly larger side)

/// C = c_tilde (1 - 2/n) (d eps + 1 / (eps mu')).
double truncation_constant(const ViewParams& params, int n, const EstimatorConfig& cfg);

/// x_i^(j) = (deg_{!=j}(i) - d(1 - 2/n)) / C, or 0 when that deviation
/// exceeds C in absolute value.
double centered_degree_factor(int degree_excluding_partner, const ViewParams& params, int n,
                              const EstimatorConfig& cfg);

/// X[i][j] = x_i^(j) x_j^(i) where deg_{!=j}(i) ignores a possible edge to j.
/// Throws BelowThreshold when d eps^2 / 4 <= 1.
PairwiseEstimate degree_product_estimate(const Graph& g, const ViewParams& params, const EstimatorConfig& cfg);

// ---------------------------------------------------------------------------
// Balance probe

enum class BalanceVerdict { sufficiently_balanced, sufficiently_unbalanced };

struct BalanceProbeResult {
    BalanceVerdict verdict = BalanceVerdict::sufficiently_balanced;
    std::vector<int> probe_set;  // sorted, size ceil(n^{3/4})
    long long cut_edges = 0;     // edges between the probe set and the rest
    double threshold = 0.0;      // d n^{3/4} (1 + 2 eps (3 mu'/4)^2)
};

/// Counts edges leaving a uniform random set of ceil(n^{3/4}) vertices and
/// reports "unbalanced" when the count reaches the threshold. Needs n >= 16.
BalanceProbeResult balance_probe(const Graph& g, const ViewParams& params, const EstimatorConfig& cfg, Rng& rng);

// ---------------------------------------------------------------------------
// Spectral estimator (for roughly balanced views)

/// Leading eigenvector v of the adjacency matrix centered by d/n off the
/// diagonal, with the all-ones direction deflated; X[i][j] = clamp(n v_i v_j).
/// An edgeless graph yields the zero matrix flagged degenerate.
PairwiseEstimate spectral_pairwise_estimate(const Graph& g, const ViewParams& params, const EstimatorConfig& cfg);

using GraphEstimator = std::function<PairwiseEstimate(const Graph&)>;

/// X_sb[i][j] = X_base(G_sigma)[sigma(i)][sigma(j)] for the given relabeling.
PairwiseEstimate randomized_symmetrization(const GraphEstimator& base, const Graph& g, std::span<const int> sigma);

/// Same with a uniform random sigma.
PairwiseEstimate randomized_symmetrization(const GraphEstimator& base, const Graph& g, Rng& rng);

// ---------------------------------------------------------------------------
// Combined estimator

struct CombinedEstimate {
    PairwiseEstimate estimate;
    BalanceProbeResult probe;
};

/// Runs the balance probe, then the degree-product estimator (unbalanced) or
/// the symmetrized spectral estimator (balanced) on the subgraph induced by
/// the vertices outside the probe set. Rows and columns of probe vertices are
/// zero. The sub-estimators see d scaled by n'/n so that the induced graph
/// keeps the same per-pair edge rates.
CombinedEstimate combined_pairwise_estimate_detailed(const Graph& g, const ViewParams& params,
                                                     const EstimatorConfig& cfg, Rng& rng);

PairwiseEstimate combined_pairwise_estimate(const Graph& g, const ViewParams& params, const EstimatorConfig& cfg, Rng& rng);

// ---------------------------------------------------------------------------
// Louvain estimator

/// +1 for pairs sharing a Louvain community, -1 otherwise (diagonal +1).
PairwiseEstimate louvain_pairwise_estimate(const Graph& g, Rng& rng);

/// Dispatches on cfg.method.
PairwiseEstimate estimate_pairwise(const Graph& g, const ViewParams& params, const EstimatorConfig& cfg, Rng& rng);

// ---------------------------------------------------------------------------
// Truth-aware estimators and correlation measurement

/// X = x x^T.
PairwiseEstimate oracle_estimate(const SignVector& x);

/// One sampled view as seen by an estimator under test. Estimators that work
/// from the graph alone must ignore `signs`.
struct ViewSample {
    SignVector signs;
    ViewParams params;
    Graph graph;
};

using PairwiseEstimator = std::function<PairwiseEstimate(const ViewSample&, Rng&)>;

/// Mean of X[i][j] over pairs with x_i = x_j minus the mean over pairs with
/// x_i != x_j, over all i < j. Throws InsufficientData if a class is empty.
double pairwise_correlation(const PairwiseEstimate& estimate, const SignVector& x);

/// Monte Carlo estimate of E[X_ij | x_i = x_j] - E[X_ij | x_i != x_j] over
/// fresh single-view instances (z uniform in [k]^n, random f, G ~ SBM2(f(z))).
/// Each trial contributes `pairs_per_trial` uniformly drawn pairs i != j, or
/// every pair i < j when that is 0. The two conditional means are pooled over
/// trials. The standard error is the spread of the per-trial differences
/// over the trials that saw both classes, or the independent-pairs formula
/// when only one such trial exists.
CorrelationEstimate estimate_pairwise_correlation(const PairwiseEstimator& estimator, int n, int k,
                                                  const ViewParams& params, int trials, Rng& rng,
                                                  long long pairs_per_trial = 0);

// ---------------------------------------------------------------------------
// Debug serialization: "MVSB-EST", n as uint64 LE, then n*n float64 LE row-major.

void write_estimate(std::ostream& out, const PairwiseEstimate& estimate);
PairwiseEstimate read_estimate(std::istream& in);

}  // namespace mvsbm
