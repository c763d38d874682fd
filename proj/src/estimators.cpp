#include "mvsbm/estimators.hpp"

#include "mvsbm/error.hpp"
#include "mvsbm/louvain.hpp"
#include "mvsbm/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

namespace mvsbm {

void EstimatorConfig::validate() const
{
    if (!(mu_prime > 0.0 && mu_prime < 0.5))
        throw InvalidParameter("EstimatorConfig: mu_prime must lie in (0, 0.5)");
    if (!(c_tilde >= 1.0))
        throw InvalidParameter("EstimatorConfig: c_tilde must be at least 1");
    if (power_iters < 1)
        throw InvalidParameter("EstimatorConfig: power_iters must be at least 1");
}

namespace {

void require_above_threshold(const ViewParams& params, const char* who)
{
    if (!(params.delta() > 0.0))
        throw BelowThreshold(std::string(who) + ": d*eps^2/4 - 1 = " + std::to_string(params.delta()) +
                             " is not positive");
}

PairwiseEstimate degree_product_unchecked(const Graph& g, const ViewParams& params, const EstimatorConfig& cfg)
{
    const int n = g.num_vertices();
    Vector<double> with_partner(n);  // used when i and j are not adjacent
    Vector<double> without_partner(n);
    for (int i = 0; i < n; ++i) {
        with_partner[i] = centered_degree_factor(g.degree(i), params, n, cfg);
        without_partner[i] = centered_degree_factor(g.degree(i) - 1, params, n, cfg);
    }
    Matrix<double> x = with_partner * with_partner.transpose();
    for (const auto& e : g.edges()) {
        const double v = without_partner[e.u] * without_partner[e.v];
        x(e.u, e.v) = v;
        x(e.v, e.u) = v;
    }
    return PairwiseEstimate(std::move(x));
}

// Smallest m with m^4 >= n^3.
int ceil_three_quarter_power(int n)
{
    const auto cube = static_cast<unsigned __int128>(n) * static_cast<unsigned __int128>(n) *
                      static_cast<unsigned __int128>(n);
    auto m = static_cast<long long>(std::floor(std::pow(static_cast<double>(n), 0.75)));
    m = std::max(0LL, m - 2);
    auto fourth = [](long long v) {
        const auto w = static_cast<unsigned __int128>(v);
        return w * w * w * w;
    };
    while (fourth(m) < cube)
        ++m;
    return static_cast<int>(m);
}

}  // namespace

double truncation_constant(const ViewParams& params, int n, const EstimatorConfig& cfg)
{
    if (!(params.eps > 0.0))
        throw InvalidParameter("degree-product estimator: eps must be positive");
    return cfg.c_tilde * (1.0 - 2.0 / n) * (params.d * params.eps + 1.0 / (params.eps * cfg.mu_prime));
}

double centered_degree_factor(int degree_excluding_partner, const ViewParams& params, int n, const EstimatorConfig& cfg)
{
    const double c = truncation_constant(params, n, cfg);
    const double deviation = degree_excluding_partner - params.d * (1.0 - 2.0 / n);
    return std::abs(deviation) <= c ? deviation / c : 0.0;
}

PairwiseEstimate degree_product_estimate(const Graph& g, const ViewParams& params, const EstimatorConfig& cfg)
{
    cfg.validate();
    require_above_threshold(params, "degree_product_estimate");
    if (g.num_vertices() < 3)
        throw InvalidParameter("degree_product_estimate: need n >= 3");
    return degree_product_unchecked(g, params, cfg);
}

BalanceProbeResult balance_probe(const Graph& g, const ViewParams& params, const EstimatorConfig& cfg, Rng& rng)
{
    cfg.validate();
    const int n = g.num_vertices();
    if (n < 16)
        throw InvalidParameter("balance_probe: need n >= 16");
    BalanceProbeResult out;
    const int m = ceil_three_quarter_power(n);
    out.probe_set = random_subset(n, m, rng);

    std::vector<char> in_probe(static_cast<std::size_t>(n), 0);
    for (const int v : out.probe_set)
        in_probe[static_cast<std::size_t>(v)] = 1;
    for (const int v : out.probe_set) {
        for (const int u : g.neighbors(v))
            out.cut_edges += in_probe[static_cast<std::size_t>(u)] ? 0 : 1;
    }
    const double gap = 3.0 * cfg.mu_prime / 4.0;
    out.threshold = params.d * std::pow(static_cast<double>(n), 0.75) * (1.0 + 2.0 * params.eps * gap * gap);
    out.verdict = static_cast<double>(out.cut_edges) >= out.threshold ? BalanceVerdict::sufficiently_unbalanced
                                                                      : BalanceVerdict::sufficiently_balanced;
    return out;
}

PairwiseEstimate spectral_pairwise_estimate(const Graph& g, const ViewParams& params, const EstimatorConfig& cfg)
{
    cfg.validate();
    const int n = g.num_vertices();
    if (n < 2)
        throw InvalidParameter("spectral_pairwise_estimate: need n >= 2");
    if (g.num_edges() == 0)
        return PairwiseEstimate::zeros(n, true);

    const Eigen::SparseMatrix<double> a = g.adjacency<double>();
    const double shift = params.d / n;
    // M = A - (d/n)(11^T - I); on mean-zero vectors this is A + (d/n) I,
    // and the rank-one part is removed by the deflation anyway.
    auto apply = [&](const Vector<double>& x) -> Vector<double> {
        Vector<double> y = a * x;
        y.array() -= shift * x.sum();
        y += shift * x;
        return y;
    };
    Rng start_rng(0x5EEDULL, static_cast<std::uint64_t>(n));
    Vector<double> start(n);
    for (int i = 0; i < n; ++i)
        start[i] = start_rng.uniform() - 0.5;

    const auto pair = deflated_power_iteration<double>(apply, std::move(start), cfg.power_iters, cfg.power_tol);
    if (pair.vector.squaredNorm() == 0.0)
        return PairwiseEstimate::zeros(n, true);
    const Vector<double> w = std::sqrt(static_cast<double>(n)) * pair.vector;
    Matrix<double> x = (w * w.transpose()).cwiseMax(-1.0).cwiseMin(1.0);
    return PairwiseEstimate(std::move(x));
}

PairwiseEstimate randomized_symmetrization(const GraphEstimator& base, const Graph& g, std::span<const int> sigma)
{
    const int n = g.num_vertices();
    if (static_cast<int>(sigma.size()) != n)
        throw InvalidInput("randomized_symmetrization: permutation size mismatch");
    const PairwiseEstimate permuted = base(permute_vertices(g, sigma));
    if (permuted.n() != n)
        throw InvalidInput("randomized_symmetrization: base estimator returned the wrong size");
    const std::vector<int> index(sigma.begin(), sigma.end());
    Matrix<double> x = permuted.values()(index, index);
    return PairwiseEstimate(std::move(x), permuted.degenerate());
}

PairwiseEstimate randomized_symmetrization(const GraphEstimator& base, const Graph& g, Rng& rng)
{
    const auto sigma = random_permutation(g.num_vertices(), rng);
    return randomized_symmetrization(base, g, sigma);
}

CombinedEstimate combined_pairwise_estimate_detailed(const Graph& g, const ViewParams& params,
                                                     const EstimatorConfig& cfg, Rng& rng)
{
    cfg.validate();
    require_above_threshold(params, "combined_pairwise_estimate");
    const int n = g.num_vertices();

    CombinedEstimate out;
    out.probe = balance_probe(g, params, cfg, rng);

    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n) - out.probe.probe_set.size());
    {
        std::size_t p = 0;
        for (int v = 0; v < n; ++v) {
            if (p < out.probe.probe_set.size() && out.probe.probe_set[p] == v)
                ++p;
            else
                rest.push_back(v);
        }
    }
    const Graph sub = induced_subgraph(g, rest);
    const int n_sub = sub.num_vertices();
    const ViewParams sub_params(params.d * n_sub / n, params.eps);

    PairwiseEstimate sub_estimate;
    if (out.probe.verdict == BalanceVerdict::sufficiently_unbalanced) {
        sub_estimate = degree_product_unchecked(sub, sub_params, cfg);
    } else {
        const GraphEstimator spectral = [&](const Graph& h) { return spectral_pairwise_estimate(h, sub_params, cfg); };
        sub_estimate = randomized_symmetrization(spectral, sub, rng);
    }

    Matrix<double> x = Matrix<double>::Zero(n, n);
    x(rest, rest) = sub_estimate.values();
    out.estimate = PairwiseEstimate(std::move(x), sub_estimate.degenerate());
    return out;
}

PairwiseEstimate combined_pairwise_estimate(const Graph& g, const ViewParams& params, const EstimatorConfig& cfg, Rng& rng)
{
    return combined_pairwise_estimate_detailed(g, params, cfg, rng).estimate;
}

PairwiseEstimate louvain_pairwise_estimate(const Graph& g, Rng& rng)
{
    const int n = g.num_vertices();
    if (n < 1)
        throw InvalidParameter("louvain_pairwise_estimate: need n >= 1");
    const auto result = louvain(g, rng);
    Matrix<double> x(n, n);
    for (int j = 0; j < n; ++j) {
        const int cj = result.community[static_cast<std::size_t>(j)];
        for (int i = 0; i < n; ++i)
            x(i, j) = result.community[static_cast<std::size_t>(i)] == cj ? 1.0 : -1.0;
    }
    return PairwiseEstimate(std::move(x));
}

PairwiseEstimate estimate_pairwise(const Graph& g, const ViewParams& params, const EstimatorConfig& cfg, Rng& rng)
{
    switch (cfg.method) {
    case EstimatorMethod::combined:
        return combined_pairwise_estimate(g, params, cfg, rng);
    case EstimatorMethod::degree_product:
        return degree_product_estimate(g, params, cfg);
    case EstimatorMethod::spectral:
        return spectral_pairwise_estimate(g, params, cfg);
    case EstimatorMethod::louvain:
        return louvain_pairwise_estimate(g, rng);
    }
    throw InvalidParameter("estimate_pairwise: unknown method");
}

PairwiseEstimate oracle_estimate(const SignVector& x)
{
    const Vector<double> v = x.as_vector<double>();
    return PairwiseEstimate(v * v.transpose());
}

double pairwise_correlation(const PairwiseEstimate& estimate, const SignVector& x)
{
    const int n = estimate.n();
    if (x.size() != n)
        throw InvalidInput("pairwise_correlation: size mismatch");
    double same = 0.0;
    double diff = 0.0;
    long long n_same = 0;
    long long n_diff = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (x[i] == x[j]) {
                same += estimate(i, j);
                ++n_same;
            } else {
                diff += estimate(i, j);
                ++n_diff;
            }
        }
    }
    if (n_same == 0 || n_diff == 0)
        throw InsufficientData("pairwise_correlation: one of the sign classes has no pairs");
    return same / static_cast<double>(n_same) - diff / static_cast<double>(n_diff);
}

CorrelationEstimate estimate_pairwise_correlation(const PairwiseEstimator& estimator, int n, int k,
                                                  const ViewParams& params, int trials, Rng& rng,
                                                  long long pairs_per_trial)
{
    if (trials < 1)
        throw InvalidParameter("estimate_pairwise_correlation: need at least one trial");
    if (n < 2)
        throw InvalidParameter("estimate_pairwise_correlation: need n >= 2");
    if (pairs_per_trial < 0)
        throw InvalidParameter("estimate_pairwise_correlation: negative pair count");

    // Sums of X and X^2 per class.
    double s_same = 0.0, q_same = 0.0, s_diff = 0.0, q_diff = 0.0;
    long long n_same = 0, n_diff = 0;
    std::vector<double> per_trial;

    const Rng base = rng.split(rng());
    for (int trial = 0; trial < trials; ++trial) {
        Rng trial_rng = base.split(static_cast<std::uint64_t>(trial));
        const auto z = sample_label_vector(n, k, trial_rng);
        const auto f = sample_sign_mapping(k, trial_rng);
        ViewSample view{f.apply(z), params, Graph()};
        view.graph = sample_sbm2_conditional(view.signs, params, trial_rng);
        const PairwiseEstimate est = estimator(view, trial_rng);
        if (est.n() != n)
            throw InvalidInput("estimate_pairwise_correlation: estimator returned the wrong size");

        double ts = 0.0, td = 0.0;
        long long tns = 0, tnd = 0;
        auto record = [&](int i, int j) {
            const double v = est(i, j);
            if (view.signs[i] == view.signs[j]) {
                ts += v;
                q_same += v * v;
                ++tns;
            } else {
                td += v;
                q_diff += v * v;
                ++tnd;
            }
        };
        if (pairs_per_trial == 0) {
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i)
                    record(i, j);
        } else {
            for (long long p = 0; p < pairs_per_trial; ++p) {
                const int i = static_cast<int>(trial_rng.uniform_int(static_cast<std::uint64_t>(n)));
                int j = static_cast<int>(trial_rng.uniform_int(static_cast<std::uint64_t>(n - 1)));
                j += j >= i ? 1 : 0;
                record(i, j);
            }
        }
        s_same += ts;
        s_diff += td;
        n_same += tns;
        n_diff += tnd;
        if (tns > 0 && tnd > 0)
            per_trial.push_back(ts / static_cast<double>(tns) - td / static_cast<double>(tnd));
    }
    if (n_same == 0 || n_diff == 0)
        throw InsufficientData("estimate_pairwise_correlation: a sign class was empty in every trial");

    CorrelationEstimate out;
    out.trials = trials;
    out.same_pairs = n_same;
    out.diff_pairs = n_diff;
    const double mean_same = s_same / static_cast<double>(n_same);
    const double mean_diff = s_diff / static_cast<double>(n_diff);
    out.c_hat = mean_same - mean_diff;
    if (per_trial.size() >= 2) {
        double mean = 0.0;
        for (const double v : per_trial)
            mean += v;
        mean /= static_cast<double>(per_trial.size());
        double var = 0.0;
        for (const double v : per_trial)
            var += (v - mean) * (v - mean);
        var /= static_cast<double>(per_trial.size() - 1);
        out.std_error = std::sqrt(var / static_cast<double>(per_trial.size()));
    } else {
        const double var_same = std::max(0.0, q_same / static_cast<double>(n_same) - mean_same * mean_same);
        const double var_diff = std::max(0.0, q_diff / static_cast<double>(n_diff) - mean_diff * mean_diff);
        out.std_error = std::sqrt(var_same / static_cast<double>(n_same) + var_diff / static_cast<double>(n_diff));
    }
    return out;
}

namespace {

constexpr char kEstimateMagic[8] = {'M', 'V', 'S', 'B', '-', 'E', 'S', 'T'};

void put_u64(std::ostream& out, std::uint64_t v)
{
    char bytes[8];
    for (int b = 0; b < 8; ++b)
        bytes[b] = static_cast<char>((v >> (8 * b)) & 0xFF);
    out.write(bytes, 8);
}

std::uint64_t get_u64(std::istream& in)
{
    unsigned char bytes[8];
    if (!in.read(reinterpret_cast<char*>(bytes), 8))
        throw ParseError("estimate: truncated stream");
    std::uint64_t v = 0;
    for (int b = 0; b < 8; ++b)
        v |= static_cast<std::uint64_t>(bytes[b]) << (8 * b);
    return v;
}

}  // namespace

void write_estimate(std::ostream& out, const PairwiseEstimate& estimate)
{
    out.write(kEstimateMagic, sizeof(kEstimateMagic));
    const int n = estimate.n();
    put_u64(out, static_cast<std::uint64_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            put_u64(out, std::bit_cast<std::uint64_t>(estimate(i, j)));
    if (!out)
        throw IoError("estimate: write failed");
}

PairwiseEstimate read_estimate(std::istream& in)
{
    char magic[8];
    if (!in.read(magic, 8) || std::memcmp(magic, kEstimateMagic, 8) != 0)
        throw ParseError("estimate: missing MVSB-EST header");
    const std::uint64_t n = get_u64(in);
    if (n > (1ULL << 20))
        throw ParseError("estimate: implausible size " + std::to_string(n));
    Matrix<double> x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            x(i, j) = std::bit_cast<double>(get_u64(in));
    try {
        return PairwiseEstimate(std::move(x));
    } catch (const InvalidInput& ex) {
        throw ParseError(std::string("estimate: ") + ex.what());
    }
}

}  // namespace mvsbm
