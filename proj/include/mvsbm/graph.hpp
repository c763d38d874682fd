#pragma once

#include <Eigen/SparseCore>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace mvsbm {

/// Undirected edge stored canonically with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Edges are kept sorted in canonical (u < v) order and mirrored into a CSR
/// adjacency whose per-vertex neighbor lists are sorted ascending.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Accepts edges in either orientation. Throws InvalidInput on self-loops,
    /// duplicate edges or endpoints outside [0, n).
    static Graph from_edges(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }

    std::span<const int> neighbors(int v) const
    {
        const auto b = offsets_[static_cast<std::size_t>(v)];
        const auto e = offsets_[static_cast<std::size_t>(v) + 1];
        return {targets_.data() + b, e - b};
    }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;

    /// Mean degree 2|E|/n.
    double mean_degree() const;

    /// Throws InvalidInput if any structural invariant is broken.
    void validate() const;

    template <typename Scalar = double>
    Eigen::SparseMatrix<Scalar> adjacency() const
    {
        std::vector<Eigen::Triplet<Scalar>> triplets;
        triplets.reserve(2 * edges_.size());
        for (const auto& e : edges_) {
            triplets.emplace_back(e.u, e.v, Scalar(1));
            triplets.emplace_back(e.v, e.u, Scalar(1));
        }
        Eigen::SparseMatrix<Scalar> a(n_, n_);
        a.setFromTriplets(triplets.begin(), triplets.end());
        return a;
    }

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    void build_adjacency();

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<int> targets_;
};

/// Edge set union of graphs on the same vertex set.
Graph union_graph(std::span<const Graph> graphs);

/// Subgraph induced on `vertices`; vertex vertices[r] becomes r.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Relabels vertex v as sigma[v].
Graph permute_vertices(const Graph& g, std::span<const int> sigma);

/// Plain-text edge list: "n m" then m lines "i j" with 0-based i < j.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

}  // namespace mvsbm
