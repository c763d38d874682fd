#pragma once

#include "mvsbm/graph.hpp"
#include "mvsbm/instance.hpp"
#include "mvsbm/labels.hpp"
#include "mvsbm/rng.hpp"

#include <span>

namespace mvsbm {

enum class EarlyFusionMethod { louvain, spectral };

/// Clusters the union of the graphs into k labels. Louvain keeps the k
/// largest communities and scatters the rest uniformly; spectral runs
/// k-means (10 restarts) on the top k - 1 eigenvectors of the union
/// adjacency with the all-ones direction projected out.
LabelVector early_fusion_cluster(std::span<const Graph> graphs, int k, EarlyFusionMethod method, Rng& rng);
LabelVector early_fusion_cluster(const MVInstance& instance, int k, EarlyFusionMethod method, Rng& rng);

/// Maps 0-based community ids to [1..k]: the k largest communities (ties to
/// the smaller id) become labels 1..k, everything else a uniform label.
LabelVector communities_to_labels(std::span<const int> community, int k, Rng& rng);

struct UnionStats {
    double p_in_hat = 0.0;
    double p_out_hat = 0.0;
    double d_star_hat = 0.0;
    double eps_star_hat = 0.0;
    double ks_ratio = 0.0;  // d* (eps* / k)^2

    long long in_edges = 0;
    long long out_edges = 0;
    long long in_pairs = 0;
    long long out_pairs = 0;
    /// Plug-in standard deviation of d_star_hat from the binomial variances
    /// of the two frequencies.
    double d_star_sigma = 0.0;
};

/// Edge frequencies of the union graph inside and across the communities of
/// z, inverted to the k-SBM parameters
///   p_in = (d*/n)(1 + (1 - 1/k) eps*),  p_out = (d*/n)(1 - eps*/k).
/// Throws DegenerateStatistics when no cross-community edge is observed.
UnionStats union_edge_stats(const Graph& union_g, const LabelVector& z);
UnionStats union_edge_stats(const MVInstance& instance);

struct UnionSandwich {
    double lower = 0.0;
    double upper = 0.0;
};

/// Interval for d* given the total view degree d t, the per-view eps and
/// the fitted eps*:
///   [d t (1 + eps/2), d t (1 + eps* k / (k - eps*))] / (1 + (1 - 1/k) eps*).
UnionSandwich union_sandwich(double d_total, double eps, double eps_star, int k);

}  // namespace mvsbm
