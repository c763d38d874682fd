#pragma once

#include "mvsbm/graph.hpp"
#include "mvsbm/labels.hpp"
#include "mvsbm/rng.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace mvsbm {

struct View {
    SignMapping mapping;
    SignVector signs;  // mapping applied to the instance labels
    ViewParams params;
    Graph graph;
};

/// A draw (z, (f_1, G_1), ..., (f_t, G_t)) of the multi-view model.
class MVInstance {
public:
    MVInstance() = default;
    MVInstance(LabelVector z, std::vector<View> views, std::uint64_t seed);

    const LabelVector& labels() const { return z_; }
    std::span<const View> views() const { return views_; }
    int num_views() const { return static_cast<int>(views_.size()); }
    int num_vertices() const { return z_.size(); }
    int k() const { return z_.k(); }
    std::uint64_t seed() const { return seed_; }

    std::vector<Graph> graphs() const;
    std::vector<ViewParams> view_params() const;

    /// Equality of the observable content: labels, per-view signs,
    /// parameters and graphs, and the seed. Table entries of labels that do
    /// not occur in z are not observable and are ignored.
    bool operator==(const MVInstance& other) const;

private:
    LabelVector z_;
    std::vector<View> views_;
    std::uint64_t seed_ = 0;
};

/// z from one substream of `rng`, then view l from its own substream: the
/// mapping f_l first, then G_l ~ SBM2(f_l(z)).
MVInstance sample_mv_instance(int n, int k, std::span<const ViewParams> views, Rng& rng);

Graph union_graph(const MVInstance& instance);

/// Header "n k t seed"; per view "d eps", a line of n signs and an edge
/// list; finally a line of n labels.
void write_instance(std::ostream& out, const MVInstance& instance);
MVInstance read_instance(std::istream& in);

}  // namespace mvsbm
