#include "mvsbm/baselines.hpp"

#include "mvsbm/error.hpp"
#include "mvsbm/louvain.hpp"
#include "mvsbm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace mvsbm {

LabelVector communities_to_labels(std::span<const int> community, int k, Rng& rng)
{
    if (k < 1)
        throw InvalidParameter("communities_to_labels: k must be at least 1");
    int count = 0;
    for (const int c : community) {
        if (c < 0)
            throw InvalidInput("communities_to_labels: negative community id");
        count = std::max(count, c + 1);
    }
    std::vector<int> size(static_cast<std::size_t>(count), 0);
    for (const int c : community)
        ++size[static_cast<std::size_t>(c)];
    std::vector<int> order(static_cast<std::size_t>(count));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return size[static_cast<std::size_t>(a)] > size[static_cast<std::size_t>(b)];
    });
    std::vector<int> label_of(static_cast<std::size_t>(count), 0);
    for (int r = 0; r < std::min(count, k); ++r)
        label_of[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r + 1;

    std::vector<int> out;
    out.reserve(community.size());
    for (const int c : community) {
        const int label = label_of[static_cast<std::size_t>(c)];
        out.push_back(label != 0 ? label : static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(k))) + 1);
    }
    return LabelVector(std::move(out), k);
}

LabelVector early_fusion_cluster(std::span<const Graph> graphs, int k, EarlyFusionMethod method, Rng& rng)
{
    if (graphs.empty())
        throw InvalidInput("early_fusion_cluster: no views");
    if (k < 1)
        throw InvalidParameter("early_fusion_cluster: k must be at least 1");
    const Graph g = union_graph(graphs);
    const int n = g.num_vertices();
    if (k == 1)
        return LabelVector(std::vector<int>(static_cast<std::size_t>(n), 1), 1);

    if (method == EarlyFusionMethod::louvain) {
        const auto result = louvain(g, rng);
        return communities_to_labels(result.community, k, rng);
    }

    if (n < k)
        throw InvalidParameter("early_fusion_cluster: need n >= k");
    const Matrix<double> a = Matrix<double>(g.adjacency<double>());
    const Matrix<double> embedding = top_eigenvectors(project_out_ones(a), k - 1);
    const auto km = kmeans(embedding, k, 10, rng);
    std::vector<int> labels(km.labels.size());
    std::transform(km.labels.begin(), km.labels.end(), labels.begin(), [](int c) { return c + 1; });
    return LabelVector(std::move(labels), k);
}

LabelVector early_fusion_cluster(const MVInstance& instance, int k, EarlyFusionMethod method, Rng& rng)
{
    const auto graphs = instance.graphs();
    return early_fusion_cluster(std::span<const Graph>(graphs), k, method, rng);
}

UnionStats union_edge_stats(const Graph& union_g, const LabelVector& z)
{
    const int n = union_g.num_vertices();
    if (z.size() != n)
        throw InvalidInput("union_edge_stats: label vector size mismatch");
    const int k = z.k();

    UnionStats s;
    for (const auto& e : union_g.edges())
        ++(z[e.u] == z[e.v] ? s.in_edges : s.out_edges);
    long long same = 0;
    for (const int c : z.community_sizes())
        same += static_cast<long long>(c) * (c - 1) / 2;
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    s.in_pairs = same;
    s.out_pairs = total - same;
    if (s.in_pairs == 0 || s.out_pairs == 0)
        throw DegenerateStatistics("union_edge_stats: z has no within-community or no cross-community pairs");
    if (s.out_edges == 0)
        throw DegenerateStatistics("union_edge_stats: no cross-community edges observed");

    s.p_in_hat = static_cast<double>(s.in_edges) / static_cast<double>(s.in_pairs);
    s.p_out_hat = static_cast<double>(s.out_edges) / static_cast<double>(s.out_pairs);

    const double r = s.p_in_hat / s.p_out_hat;
    s.eps_star_hat = k * (r - 1.0) / (k - 1.0 + r);
    const double w_in = 1.0 / k;
    const double w_out = 1.0 - 1.0 / k;
    s.d_star_hat = n * (w_in * s.p_in_hat + w_out * s.p_out_hat);
    s.ks_ratio = s.d_star_hat * (s.eps_star_hat / k) * (s.eps_star_hat / k);

    const double var_in = s.p_in_hat * (1.0 - s.p_in_hat) / static_cast<double>(s.in_pairs);
    const double var_out = s.p_out_hat * (1.0 - s.p_out_hat) / static_cast<double>(s.out_pairs);
    s.d_star_sigma = n * std::sqrt(w_in * w_in * var_in + w_out * w_out * var_out);
    return s;
}

UnionStats union_edge_stats(const MVInstance& instance)
{
    return union_edge_stats(union_graph(instance), instance.labels());
}

UnionSandwich union_sandwich(double d_total, double eps, double eps_star, int k)
{
    if (k < 2)
        throw InvalidParameter("union_sandwich: k must be at least 2");
    if (!(eps_star < k))
        throw InvalidParameter("union_sandwich: eps* must be below k");
    const double denom = 1.0 + (1.0 - 1.0 / k) * eps_star;
    UnionSandwich out;
    out.lower = d_total * (1.0 + eps / 2.0) / denom;
    out.upper = d_total * (1.0 + eps_star * k / (k - eps_star)) / denom;
    return out;
}

}  // namespace mvsbm
