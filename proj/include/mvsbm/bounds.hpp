#pragma once

#include "mvsbm/error.hpp"
#include "mvsbm/estimators.hpp"
#include "mvsbm/labels.hpp"
#include "mvsbm/rng.hpp"

#include <cmath>
#include <string>

namespace mvsbm {

/// h2(p) in bits; 0 at both endpoints.
template <typename Scalar>
Scalar binary_entropy(Scalar p)
{
    if (!(p >= Scalar(0) && p <= Scalar(1)))
        throw InvalidParameter("binary_entropy: p must lie in [0, 1]");
    if (p == Scalar(0) || p == Scalar(1))
        return Scalar(0);
    using std::log2;
    return -p * log2(p) - (Scalar(1) - p) * log2(Scalar(1) - p);
}

/// l(beta) = log2 k - h2(beta) - (1 - beta) log2(k - 1).
template <typename Scalar>
Scalar excess_info(Scalar beta, int k)
{
    if (k < 2)
        throw InvalidParameter("excess_info: k must be at least 2");
    if (!(beta > Scalar(0) && beta < Scalar(1)))
        throw InvalidParameter("excess_info: beta must lie in (0, 1)");
    using std::log2;
    return log2(Scalar(k)) - binary_entropy(beta) - (Scalar(1) - beta) * log2(Scalar(k - 1));
}

struct BoundParams {
    int k = 2;
    double rho = 0.1;
    double tau = 1.0;
    double alpha_bar = 1.0;
    double c_abs = 1.0;

    /// rho = 0 is accepted and gives t_min = 0.
    void validate() const;
};

/// tau l(1/k + rho) / (2 C alpha_bar).
double blackbox_lower_bound_t(const BoundParams& params);

/// Flip probability 1/2 - sqrt(alpha / 8) of the channel.
double bsc_flip_probability(double alpha);

/// x sent through the binary symmetric channel.
SignVector bsc_channel(const SignVector& x, double alpha, Rng& rng);

/// X = x' x'^T with x' = bsc_channel(x, alpha).
PairwiseEstimate bsc_alpha_estimate(const SignVector& x, double alpha, Rng& rng);

/// n (1 - h2(1/2 + sqrt(alpha / 8))).
double bsc_mutual_info_bound(double alpha, long long n);

}  // namespace mvsbm
