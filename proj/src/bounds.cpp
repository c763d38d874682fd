#include "mvsbm/bounds.hpp"

#include <vector>

namespace mvsbm {

namespace {

void check_alpha(double alpha, const char* who)
{
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw InvalidParameter(std::string(who) + ": alpha must lie in (0, 2]");
}

}  // namespace

void BoundParams::validate() const
{
    if (k < 2)
        throw InvalidParameter("BoundParams: k must be at least 2");
    if (!(rho >= 0.0))
        throw InvalidParameter("BoundParams: rho must be non-negative");
    if (!(1.0 / k + rho < 1.0))
        throw InvalidParameter("BoundParams: 1/k + rho must be below 1");
    if (!(tau > 0.0 && tau <= 1.0))
        throw InvalidParameter("BoundParams: tau must lie in (0, 1]");
    if (!(alpha_bar > 0.0 && alpha_bar <= 2.0))
        throw InvalidParameter("BoundParams: alpha_bar must lie in (0, 2]");
    if (!(c_abs > 0.0))
        throw InvalidParameter("BoundParams: C must be positive");
}

double blackbox_lower_bound_t(const BoundParams& params)
{
    params.validate();
    const double beta = 1.0 / params.k + params.rho;
    // l(1/k) vanishes analytically; avoid returning rounding noise there
    const double l = params.rho == 0.0 ? 0.0 : excess_info(beta, params.k);
    return params.tau * l / (2.0 * params.c_abs * params.alpha_bar);
}

double bsc_flip_probability(double alpha)
{
    check_alpha(alpha, "bsc_flip_probability");
    return std::max(0.0, 0.5 - std::sqrt(alpha / 8.0));
}

SignVector bsc_channel(const SignVector& x, double alpha, Rng& rng)
{
    const double flip = bsc_flip_probability(alpha);
    std::vector<int> out(static_cast<std::size_t>(x.size()));
    for (int i = 0; i < x.size(); ++i)
        out[static_cast<std::size_t>(i)] = rng.bernoulli(flip) ? -x[i] : x[i];
    return SignVector(std::move(out));
}

PairwiseEstimate bsc_alpha_estimate(const SignVector& x, double alpha, Rng& rng)
{
    return oracle_estimate(bsc_channel(x, alpha, rng));
}

double bsc_mutual_info_bound(double alpha, long long n)
{
    check_alpha(alpha, "bsc_mutual_info_bound");
    if (n < 1)
        throw InvalidParameter("bsc_mutual_info_bound: n must be at least 1");
    const double p = std::min(1.0, 0.5 + std::sqrt(alpha / 8.0));
    return static_cast<double>(n) * (1.0 - binary_entropy(p));
}

}  // namespace mvsbm
