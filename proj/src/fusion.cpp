#include "mvsbm/fusion.hpp"

#include "mvsbm/error.hpp"
#include "mvsbm/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace mvsbm {

void ScoreAccumulator::add(const PairwiseEstimate& estimate)
{
    if (scores_.t == 0) {
        scores_.values = estimate.values();
    } else {
        if (estimate.n() != scores_.n())
            throw InvalidInput("accumulate_scores: estimates differ in size (" + std::to_string(estimate.n()) +
                               " vs " + std::to_string(scores_.n()) + ")");
        scores_.values += estimate.values();
    }
    ++scores_.t;
}

ScoreMatrix accumulate_scores(std::span<const PairwiseEstimate> estimates)
{
    if (estimates.empty())
        throw InvalidInput("accumulate_scores: no estimates");
    ScoreAccumulator acc;
    for (const auto& e : estimates)
        acc.add(e);
    return acc.take();
}

NeighborhoodMatrix::NeighborhoodMatrix(int n, int out_degree)
    : n_(n), out_degree_(out_degree), words_per_row_((static_cast<std::size_t>(n) + 63) / 64)
{
    if (n < 0)
        throw InvalidParameter("NeighborhoodMatrix: negative size");
    bits_.assign(words_per_row_ * static_cast<std::size_t>(n), 0);
}

void NeighborhoodMatrix::set(int i, int j, bool value)
{
    const std::uint64_t mask = std::uint64_t{1} << (static_cast<unsigned>(j) & 63U);
    if (value)
        bits_[word(i, j)] |= mask;
    else
        bits_[word(i, j)] &= ~mask;
}

int NeighborhoodMatrix::row_count(int i) const
{
    int total = 0;
    const std::size_t base = static_cast<std::size_t>(i) * words_per_row_;
    for (std::size_t w = 0; w < words_per_row_; ++w)
        total += std::popcount(bits_[base + w]);
    return total;
}

int NeighborhoodMatrix::row_distance(int i, int j) const
{
    return row_distance(i, *this, j);
}

int NeighborhoodMatrix::row_distance(int i, const NeighborhoodMatrix& other, int j) const
{
    if (other.n_ != n_)
        throw InvalidInput("NeighborhoodMatrix: size mismatch");
    int total = 0;
    const std::size_t a = static_cast<std::size_t>(i) * words_per_row_;
    const std::size_t b = static_cast<std::size_t>(j) * words_per_row_;
    for (std::size_t w = 0; w < words_per_row_; ++w)
        total += std::popcount(bits_[a + w] ^ other.bits_[b + w]);
    return total;
}

int neighborhood_size(int n, int k)
{
    if (k < 1)
        throw InvalidParameter("neighborhood_size: k must be at least 1");
    if (n < 1)
        return 0;
    const auto m = static_cast<int>(std::lround(static_cast<double>(n) / k));
    return std::clamp(m, 0, n - 1);
}

NeighborhoodMatrix build_topk_graph(const ScoreMatrix& scores, int k)
{
    const int n = scores.n();
    if (k < 1)
        throw InvalidParameter("build_topk_graph: k must be at least 1");
    if (n < k)
        throw InvalidParameter("build_topk_graph: need n >= k");
    const int m = neighborhood_size(n, k);
    NeighborhoodMatrix a(n, m);

    parallel_for(0, static_cast<std::size_t>(n), [&](std::size_t row) {
        const int i = static_cast<int>(row);
        std::vector<int> cols;
        cols.reserve(static_cast<std::size_t>(n) - 1);
        for (int j = 0; j < n; ++j)
            if (j != i)
                cols.push_back(j);
        auto better = [&](int x, int y) {
            const double bx = scores.values(i, x);
            const double by = scores.values(i, y);
            return bx > by || (bx == by && x < y);
        };
        std::partial_sort(cols.begin(), cols.begin() + m, cols.end(), better);
        // rows occupy disjoint words, so concurrent writes do not overlap
        for (int r = 0; r < m; ++r)
            a.set(i, cols[static_cast<std::size_t>(r)]);
        a.set(i, i);
    });
    return a;
}

NeighborhoodMatrix community_matrix(const LabelVector& z)
{
    const int n = z.size();
    NeighborhoodMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (z[i] == z[j])
                a.set(i, j);
    return a;
}

LabelVector second_moment_rounding(const NeighborhoodMatrix& a, int k, Rng& rng)
{
    if (k < 1)
        throw InvalidParameter("second_moment_rounding: k must be at least 1");
    const int n = a.n();
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    std::vector<int> unassigned(static_cast<std::size_t>(n));
    std::iota(unassigned.begin(), unassigned.end(), 0);

    for (int p = 1; p <= k && !unassigned.empty(); ++p) {
        const int pivot = unassigned[rng.uniform_int(unassigned.size())];
        std::vector<int> still;
        still.reserve(unassigned.size());
        for (const int j : unassigned) {
            // distance <= n/k, kept in integers
            if (static_cast<long long>(a.row_distance(pivot, j)) * k <= n)
                labels[static_cast<std::size_t>(j)] = p;
            else
                still.push_back(j);
        }
        unassigned = std::move(still);
    }
    for (const int j : unassigned)
        labels[static_cast<std::size_t>(j)] = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(k))) + 1;
    return LabelVector(std::move(labels), k);
}

void FusionConfig::validate() const
{
    if (!(c_bar > 0.0 && c_bar <= 2.0))
        throw InvalidParameter("FusionConfig: c_bar must lie in (0, 2]");
    if (!(q > 0.0))
        throw InvalidParameter("FusionConfig: q must be positive");
}

std::vector<int> representative_rows(const NeighborhoodMatrix& a, const LabelVector& z, double q, double c_bar, int t)
{
    if (a.n() != z.size())
        throw InvalidInput("representative_rows: size mismatch");
    const NeighborhoodMatrix truth = community_matrix(z);
    const double threshold = a.n() * std::exp(-q * c_bar * c_bar * t);
    std::vector<int> out;
    for (int i = 0; i < a.n(); ++i)
        if (a.row_distance(i, truth, i) <= threshold)
            out.push_back(i);
    return out;
}

LabelVector late_fusion_from_estimates(std::span<const PairwiseEstimate> estimates, int k, Rng& rng)
{
    const ScoreMatrix b = accumulate_scores(estimates);
    return second_moment_rounding(build_topk_graph(b, k), k, rng);
}

LabelVector late_fusion_cluster(std::span<const Graph> graphs, std::span<const ViewParams> view_params, int k,
                                const EstimatorConfig& cfg, Rng& rng, const EstimateObserver& observer)
{
    if (graphs.empty())
        throw InvalidInput("late_fusion_cluster: no views");
    if (graphs.size() != view_params.size())
        throw InvalidInput("late_fusion_cluster: one ViewParams per graph is required");
    const int n = graphs.front().num_vertices();
    for (const auto& g : graphs)
        if (g.num_vertices() != n)
            throw InvalidInput("late_fusion_cluster: graphs differ in vertex count");
    cfg.validate();

    const Rng base = rng.split(rng());
    ScoreAccumulator acc;
    for (std::size_t l = 0; l < graphs.size(); ++l) {
        Rng view_rng = base.split(l);
        const PairwiseEstimate est = estimate_pairwise(graphs[l], view_params[l], cfg, view_rng);
        if (observer)
            observer(static_cast<int>(l), est);
        acc.add(est);
    }
    Rng round_rng = base.split(graphs.size());
    return second_moment_rounding(build_topk_graph(acc.scores(), k), k, round_rng);
}

}  // namespace mvsbm
