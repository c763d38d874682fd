#pragma once

#include "mvsbm/graph.hpp"
#include "mvsbm/rng.hpp"

#include <vector>

namespace mvsbm {

struct LouvainOptions {
    double resolution = 1.0;
    /// A node moves only if its modularity gain exceeds this.
    double min_gain = 1e-12;
    int max_levels = 64;
};

struct LouvainResult {
    std::vector<int> community;  // 0-based, compacted ids
    int num_communities = 0;
    double modularity = 0.0;
};

/// Two-phase multilevel modularity maximization (local moving, then
/// aggregation), repeated until a level produces no move. The node sweep
/// order of every pass is drawn from `rng`.
LouvainResult louvain(const Graph& g, Rng& rng, const LouvainOptions& options = {});

/// Newman modularity of a partition of an unweighted graph.
double modularity(const Graph& g, const std::vector<int>& community, double resolution = 1.0);

}  // namespace mvsbm
