#include "mvsbm/louvain.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace mvsbm {

namespace {

// Weighted graph with self-loop weights kept separately.
struct WeightedGraph {
    int n = 0;
    std::vector<std::size_t> offsets;
    std::vector<int> targets;
    std::vector<double> weights;
    std::vector<double> self_loops;  // internal weight per node, counted once
    std::vector<double> degrees;     // 2 * self_loop + incident weight
    double total_weight = 0.0;       // m

    static WeightedGraph from_graph(const Graph& g)
    {
        WeightedGraph w;
        w.n = g.num_vertices();
        w.offsets.assign(static_cast<std::size_t>(w.n) + 1, 0);
        for (int v = 0; v < w.n; ++v)
            w.offsets[static_cast<std::size_t>(v) + 1] = w.offsets[static_cast<std::size_t>(v)] + static_cast<std::size_t>(g.degree(v));
        w.targets.reserve(w.offsets.back());
        for (int v = 0; v < w.n; ++v)
            for (const int u : g.neighbors(v))
                w.targets.push_back(u);
        w.weights.assign(w.targets.size(), 1.0);
        w.self_loops.assign(static_cast<std::size_t>(w.n), 0.0);
        w.degrees.resize(static_cast<std::size_t>(w.n));
        for (int v = 0; v < w.n; ++v)
            w.degrees[static_cast<std::size_t>(v)] = g.degree(v);
        w.total_weight = static_cast<double>(g.num_edges());
        return w;
    }
};

// One level of local moving; returns true if any node changed community.
bool local_moving(const WeightedGraph& g, std::vector<int>& comm, Rng& rng, const LouvainOptions& opt)
{
    const int n = g.n;
    const double two_m = 2.0 * g.total_weight;
    std::vector<double> tot(static_cast<std::size_t>(n), 0.0);
    for (int v = 0; v < n; ++v)
        tot[static_cast<std::size_t>(comm[static_cast<std::size_t>(v)])] += g.degrees[static_cast<std::size_t>(v)];

    std::vector<double> neigh_weight(static_cast<std::size_t>(n), 0.0);
    std::vector<long long> stamp(static_cast<std::size_t>(n), -1);
    long long visit = 0;
    std::vector<int> neigh_comms;
    neigh_comms.reserve(64);

    bool any_move = false;
    bool moved = true;
    while (moved) {
        moved = false;
        const auto order = random_permutation(n, rng);
        for (const int v : order) {
            const auto vi = static_cast<std::size_t>(v);
            const int current = comm[vi];
            const double kv = g.degrees[vi];

            ++visit;
            neigh_comms.clear();
            neigh_comms.push_back(current);
            stamp[static_cast<std::size_t>(current)] = visit;
            for (std::size_t e = g.offsets[vi]; e < g.offsets[vi + 1]; ++e) {
                const int c = comm[static_cast<std::size_t>(g.targets[e])];
                if (stamp[static_cast<std::size_t>(c)] != visit) {
                    stamp[static_cast<std::size_t>(c)] = visit;
                    neigh_comms.push_back(c);
                }
                neigh_weight[static_cast<std::size_t>(c)] += g.weights[e];
            }

            tot[static_cast<std::size_t>(current)] -= kv;
            auto gain = [&](int c) {
                return neigh_weight[static_cast<std::size_t>(c)] -
                       opt.resolution * tot[static_cast<std::size_t>(c)] * kv / two_m;
            };
            int best = current;
            double best_gain = gain(current);
            // gains are in units of m * delta-modularity
            const double threshold = opt.min_gain * g.total_weight;
            for (const int c : neigh_comms) {
                const double gc = gain(c);
                if (gc > best_gain + threshold) {
                    best = c;
                    best_gain = gc;
                }
            }
            tot[static_cast<std::size_t>(best)] += kv;
            for (const int c : neigh_comms)
                neigh_weight[static_cast<std::size_t>(c)] = 0.0;

            if (best != current) {
                comm[vi] = best;
                moved = true;
                any_move = true;
            }
        }
    }
    return any_move;
}

int compact(std::vector<int>& comm)
{
    std::unordered_map<int, int> ids;
    for (auto& c : comm) {
        const auto [it, inserted] = ids.try_emplace(c, static_cast<int>(ids.size()));
        c = it->second;
    }
    return static_cast<int>(ids.size());
}

WeightedGraph aggregate(const WeightedGraph& g, const std::vector<int>& comm, int num_comms)
{
    WeightedGraph out;
    out.n = num_comms;
    out.self_loops.assign(static_cast<std::size_t>(num_comms), 0.0);
    out.degrees.assign(static_cast<std::size_t>(num_comms), 0.0);
    out.total_weight = g.total_weight;

    std::vector<std::unordered_map<int, double>> links(static_cast<std::size_t>(num_comms));
    for (int v = 0; v < g.n; ++v) {
        const auto vi = static_cast<std::size_t>(v);
        const int cv = comm[vi];
        out.self_loops[static_cast<std::size_t>(cv)] += g.self_loops[vi];
        out.degrees[static_cast<std::size_t>(cv)] += g.degrees[vi];
        for (std::size_t e = g.offsets[vi]; e < g.offsets[vi + 1]; ++e) {
            const int cu = comm[static_cast<std::size_t>(g.targets[e])];
            if (cu == cv)
                out.self_loops[static_cast<std::size_t>(cv)] += 0.5 * g.weights[e];  // seen from both ends
            else
                links[static_cast<std::size_t>(cv)][cu] += g.weights[e];
        }
    }
    out.offsets.assign(static_cast<std::size_t>(num_comms) + 1, 0);
    for (int c = 0; c < num_comms; ++c) {
        std::vector<std::pair<int, double>> sorted(links[static_cast<std::size_t>(c)].begin(),
                                                   links[static_cast<std::size_t>(c)].end());
        std::sort(sorted.begin(), sorted.end());
        for (const auto& [t, w] : sorted) {
            out.targets.push_back(t);
            out.weights.push_back(w);
        }
        out.offsets[static_cast<std::size_t>(c) + 1] = out.targets.size();
    }
    return out;
}

}  // namespace

LouvainResult louvain(const Graph& g, Rng& rng, const LouvainOptions& options)
{
    const int n = g.num_vertices();
    LouvainResult result;
    result.community.resize(static_cast<std::size_t>(n));
    std::iota(result.community.begin(), result.community.end(), 0);
    result.num_communities = n;
    if (g.num_edges() == 0) {
        result.modularity = 0.0;
        return result;
    }

    WeightedGraph level = WeightedGraph::from_graph(g);
    for (int depth = 0; depth < options.max_levels; ++depth) {
        std::vector<int> comm(static_cast<std::size_t>(level.n));
        std::iota(comm.begin(), comm.end(), 0);
        if (!local_moving(level, comm, rng, options))
            break;
        const int num = compact(comm);
        for (auto& c : result.community)
            c = comm[static_cast<std::size_t>(c)];
        result.num_communities = num;
        if (num == level.n)
            break;
        level = aggregate(level, comm, num);
    }
    result.num_communities = compact(result.community);
    result.modularity = modularity(g, result.community, options.resolution);
    return result;
}

double modularity(const Graph& g, const std::vector<int>& community, double resolution)
{
    const double m = static_cast<double>(g.num_edges());
    if (m == 0.0)
        return 0.0;
    const int num = community.empty() ? 0 : *std::max_element(community.begin(), community.end()) + 1;
    std::vector<double> internal(static_cast<std::size_t>(num), 0.0);
    std::vector<double> tot(static_cast<std::size_t>(num), 0.0);
    for (int v = 0; v < g.num_vertices(); ++v)
        tot[static_cast<std::size_t>(community[static_cast<std::size_t>(v)])] += g.degree(v);
    for (const auto& e : g.edges()) {
        if (community[static_cast<std::size_t>(e.u)] == community[static_cast<std::size_t>(e.v)])
            internal[static_cast<std::size_t>(community[static_cast<std::size_t>(e.u)])] += 1.0;
    }
    double q = 0.0;
    for (int c = 0; c < num; ++c) {
        const double a = tot[static_cast<std::size_t>(c)] / (2.0 * m);
        q += internal[static_cast<std::size_t>(c)] / m - resolution * a * a;
    }
    return q;
}

}  // namespace mvsbm
