#include "mvsbm/sampling.hpp"

#include "mvsbm/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace mvsbm {

namespace {

void check_probability(double p, const char* what)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidParameter(std::string(what) + ": edge probability " + std::to_string(p) +
                               " outside [0, 1]");
}

// Bernoulli(p) edges among all pairs of `members`.
void sample_within(std::span<const int> members, double p, Rng& rng, std::vector<Edge>& out)
{
    const auto s = static_cast<std::int64_t>(members.size());
    if (s < 2 || p <= 0.0)
        return;
    // Batagelj-Brandes walk over the strictly lower triangle (v > w).
    std::int64_t v = 1;
    std::int64_t w = -1;
    while (v < s) {
        const std::uint64_t skip = rng.geometric_skip(p);
        if (skip == Rng::max())
            return;
        w += 1 + static_cast<std::int64_t>(std::min<std::uint64_t>(skip, static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(s)));
        while (w >= v && v < s) {
            w -= v;
            ++v;
        }
        if (v < s)
            out.push_back({members[static_cast<std::size_t>(w)], members[static_cast<std::size_t>(v)]});
    }
}

// Bernoulli(p) edges across the bipartite block a x b.
void sample_across(std::span<const int> a, std::span<const int> b, double p, Rng& rng, std::vector<Edge>& out)
{
    const auto total = static_cast<std::uint64_t>(a.size()) * static_cast<std::uint64_t>(b.size());
    if (total == 0 || p <= 0.0)
        return;
    std::uint64_t index = 0;
    while (index < total) {
        const std::uint64_t skip = rng.geometric_skip(p);
        if (skip >= total - index)
            return;
        index += skip;
        out.push_back({a[static_cast<std::size_t>(index / b.size())], b[static_cast<std::size_t>(index % b.size())]});
        ++index;
    }
}

}  // namespace

LabelVector sample_label_vector(int n, int k, Rng& rng)
{
    if (n < 1)
        throw InvalidParameter("sample_label_vector: n must be at least 1");
    if (k < 1)
        throw InvalidParameter("sample_label_vector: k must be at least 1");
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (auto& l : labels)
        l = 1 + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(k)));
    return LabelVector(std::move(labels), k);
}

SignMapping sample_sign_mapping(int k, Rng& rng)
{
    if (k < 1)
        throw InvalidParameter("sample_sign_mapping: k must be at least 1");
    std::vector<int> table(static_cast<std::size_t>(k));
    for (auto& s : table)
        s = rng.sign();
    return SignMapping(std::move(table));
}

SignVector sample_sign_vector(int n, double p_positive, Rng& rng)
{
    if (n < 1)
        throw InvalidParameter("sample_sign_vector: n must be at least 1");
    if (!(p_positive >= 0.0 && p_positive <= 1.0))
        throw InvalidParameter("sample_sign_vector: p must lie in [0, 1]");
    std::vector<int> x(static_cast<std::size_t>(n));
    for (auto& s : x)
        s = rng.bernoulli(p_positive) ? 1 : -1;
    return SignVector(std::move(x));
}

Graph sample_sbm2_conditional(const SignVector& x, const ViewParams& params, Rng& rng)
{
    const int n = x.size();
    if (n < 2)
        throw InvalidParameter("sample_sbm2_conditional: need n >= 2");
    const double base = params.d / static_cast<double>(n);
    const double p_same = (1.0 + params.eps / 2.0) * base;
    const double p_diff = (1.0 - params.eps / 2.0) * base;
    check_probability(p_same, "sample_sbm2_conditional");
    check_probability(p_diff, "sample_sbm2_conditional");

    std::vector<int> plus;
    std::vector<int> minus;
    for (int i = 0; i < n; ++i)
        (x[i] > 0 ? plus : minus).push_back(i);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(params.d * n / 2.0 * 1.2) + 16);
    sample_within(plus, p_same, rng, edges);
    sample_within(minus, p_same, rng, edges);
    sample_across(plus, minus, p_diff, rng, edges);
    return Graph::from_edges(n, std::move(edges));
}

Graph sample_sbm_k_conditional(const LabelVector& z, double d, double eps, Rng& rng)
{
    const int n = z.size();
    const int k = z.k();
    if (!(d >= 0.0))
        throw InvalidParameter("sample_sbm_k: d must be non-negative");
    const double base = d / static_cast<double>(n);
    const double p_in = (1.0 + (1.0 - 1.0 / k) * eps) * base;
    const double p_out = (1.0 - eps / k) * base;
    check_probability(p_in, "sample_sbm_k");
    check_probability(p_out, "sample_sbm_k");

    std::vector<std::vector<int>> members(static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i)
        members[static_cast<std::size_t>(z[i] - 1)].push_back(i);

    std::vector<Edge> edges;
    for (int a = 0; a < k; ++a) {
        sample_within(members[static_cast<std::size_t>(a)], p_in, rng, edges);
        for (int b = a + 1; b < k; ++b)
            sample_across(members[static_cast<std::size_t>(a)], members[static_cast<std::size_t>(b)], p_out, rng, edges);
    }
    return Graph::from_edges(n, std::move(edges));
}

std::pair<LabelVector, Graph> sample_sbm_k(int n, int k, double d, double eps, Rng& rng)
{
    auto z = sample_label_vector(n, k, rng);
    auto g = sample_sbm_k_conditional(z, d, eps, rng);
    return {std::move(z), std::move(g)};
}

bool is_balanced(const LabelVector& z, double slack_exponent)
{
    const double n = z.size();
    const double target = n / z.k();
    const double slack = std::pow(n, -slack_exponent);
    for (const int size : z.community_sizes()) {
        if (size < (1.0 - slack) * target || size > (1.0 + slack) * target)
            return false;
    }
    return true;
}

}  // namespace mvsbm
