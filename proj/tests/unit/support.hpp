#pragma once

#include "mvsbm/estimators.hpp"
#include "mvsbm/graph.hpp"
#include "mvsbm/labels.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

namespace test_support {

/// Two cliques {0..h-1} and {h..n-1}.
inline mvsbm::Graph two_cliques(int n)
{
    const int h = n / 2;
    std::vector<mvsbm::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((i < h) == (j < h))
                edges.push_back({i, j});
    return mvsbm::Graph::from_edges(n, edges);
}

inline mvsbm::LabelVector two_clique_labels(int n)
{
    std::vector<int> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        z[static_cast<std::size_t>(i)] = i < n / 2 ? 1 : 2;
    return mvsbm::LabelVector(z, 2);
}

/// Symmetric with entries in [-1, 1], checked entry by entry.
inline void check_estimate_shape(const mvsbm::PairwiseEstimate& x)
{
    const int n = x.n();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            REQUIRE(x(i, j) == x(j, i));
            REQUIRE(std::abs(x(i, j)) <= 1.0);
        }
    }
}

/// Binomial z score of `hits` out of `trials` against probability p.
inline double z_score(long long hits, long long trials, double p)
{
    const double mean = static_cast<double>(trials) * p;
    return (static_cast<double>(hits) - mean) / std::sqrt(static_cast<double>(trials) * p * (1.0 - p));
}

}  // namespace test_support
