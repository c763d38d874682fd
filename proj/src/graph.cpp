#include "mvsbm/graph.hpp"

#include "mvsbm/error.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>

namespace mvsbm {

Graph::Graph(int n) : n_(n), offsets_(static_cast<std::size_t>(n) + 1, 0)
{
    if (n < 0)
        throw InvalidParameter("Graph: negative vertex count");
}

Graph Graph::from_edges(int n, std::vector<Edge> edges)
{
    Graph g(n);
    for (auto& e : edges) {
        if (e.u == e.v)
            throw InvalidInput("Graph: self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v)
            std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n)
            throw InvalidInput("Graph: edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                               ") outside [0, " + std::to_string(n) + ")");
    }
    std::sort(edges.begin(), edges.end());
    if (const auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw InvalidInput("Graph: duplicate edge (" + std::to_string(dup->u) + ", " +
                           std::to_string(dup->v) + ")");
    g.edges_ = std::move(edges);
    g.build_adjacency();
    return g;
}

void Graph::build_adjacency()
{
    std::vector<std::size_t> deg(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& e : edges_) {
        ++deg[static_cast<std::size_t>(e.u) + 1];
        ++deg[static_cast<std::size_t>(e.v) + 1];
    }
    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int v = 0; v < n_; ++v)
        offsets_[static_cast<std::size_t>(v) + 1] = offsets_[static_cast<std::size_t>(v)] + deg[static_cast<std::size_t>(v) + 1];
    targets_.assign(2 * edges_.size(), 0);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    // Canonical edges are sorted by (u, v), so filling in this order leaves
    // every neighbor list sorted: for vertex w, neighbors x < w arrive via
    // edges (x, w) in increasing x before any (w, y).
    for (const auto& e : edges_)
        targets_[cursor[static_cast<std::size_t>(e.v)]++] = e.u;
    for (const auto& e : edges_)
        targets_[cursor[static_cast<std::size_t>(e.u)]++] = e.v;
}

bool Graph::has_edge(int u, int v) const
{
    if (u == v)
        return false;
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

double Graph::mean_degree() const
{
    return n_ == 0 ? 0.0 : 2.0 * static_cast<double>(edges_.size()) / static_cast<double>(n_);
}

void Graph::validate() const
{
    if (offsets_.size() != static_cast<std::size_t>(n_) + 1)
        throw InvalidInput("Graph: offset table has wrong size");
    std::size_t degree_sum = 0;
    for (int v = 0; v < n_; ++v) {
        const auto nb = neighbors(v);
        degree_sum += nb.size();
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (nb[i] == v)
                throw InvalidInput("Graph: self-loop at " + std::to_string(v));
            if (nb[i] < 0 || nb[i] >= n_)
                throw InvalidInput("Graph: neighbor out of range");
            if (i > 0 && nb[i - 1] >= nb[i])
                throw InvalidInput("Graph: adjacency of " + std::to_string(v) + " not strictly ascending");
            if (!std::binary_search(neighbors(nb[i]).begin(), neighbors(nb[i]).end(), v))
                throw InvalidInput("Graph: adjacency is not mirrored");
        }
    }
    if (degree_sum != 2 * edges_.size())
        throw InvalidInput("Graph: degree sum differs from twice the edge count");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].u >= edges_[i].v)
            throw InvalidInput("Graph: edge not in canonical orientation");
        if (i > 0 && !(edges_[i - 1] < edges_[i]))
            throw InvalidInput("Graph: edge list not sorted or has duplicates");
    }
}

Graph union_graph(std::span<const Graph> graphs)
{
    if (graphs.empty())
        throw InvalidInput("union_graph: need at least one graph");
    const int n = graphs.front().num_vertices();
    std::vector<Edge> merged;
    for (const auto& g : graphs) {
        if (g.num_vertices() != n)
            throw InvalidInput("union_graph: graphs have different vertex counts");
        merged.insert(merged.end(), g.edges().begin(), g.edges().end());
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    return Graph::from_edges(n, std::move(merged));
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices)
{
    std::vector<int> index(static_cast<std::size_t>(g.num_vertices()), -1);
    for (std::size_t r = 0; r < vertices.size(); ++r) {
        const int v = vertices[r];
        if (v < 0 || v >= g.num_vertices() || index[static_cast<std::size_t>(v)] != -1)
            throw InvalidInput("induced_subgraph: vertex list must be distinct and in range");
        index[static_cast<std::size_t>(v)] = static_cast<int>(r);
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        const int a = index[static_cast<std::size_t>(e.u)];
        const int b = index[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0)
            edges.push_back({a, b});
    }
    return Graph::from_edges(static_cast<int>(vertices.size()), std::move(edges));
}

Graph permute_vertices(const Graph& g, std::span<const int> sigma)
{
    if (static_cast<int>(sigma.size()) != g.num_vertices())
        throw InvalidInput("permute_vertices: permutation size mismatch");
    std::vector<Edge> edges;
    edges.reserve(g.num_edges());
    for (const auto& e : g.edges())
        edges.push_back({sigma[static_cast<std::size_t>(e.u)], sigma[static_cast<std::size_t>(e.v)]});
    return Graph::from_edges(g.num_vertices(), std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

Graph read_edge_list(std::istream& in)
{
    long long n = 0;
    long long m = 0;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw ParseError("edge list: expected header \"n m\"");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        Edge e;
        if (!(in >> e.u >> e.v))
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, read " + std::to_string(i));
        if (e.u >= e.v)
            throw ParseError("edge list: edge " + std::to_string(i) + " is not written as i < j");
        edges.push_back(e);
    }
    try {
        return Graph::from_edges(static_cast<int>(n), std::move(edges));
    } catch (const InvalidInput& ex) {
        throw ParseError(std::string("edge list: ") + ex.what());
    }
}

}  // namespace mvsbm
