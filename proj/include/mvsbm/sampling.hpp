#pragma once

#include "mvsbm/graph.hpp"
#include "mvsbm/labels.hpp"
#include "mvsbm/rng.hpp"

#include <span>
#include <utility>

namespace mvsbm {

/// i.i.d. uniform labels in [1..k].
LabelVector sample_label_vector(int n, int k, Rng& rng);

/// k i.i.d. uniform signs.
SignMapping sample_sign_mapping(int k, Rng& rng);

/// n i.i.d. signs with P(+1) = p_positive.
SignVector sample_sign_vector(int n, double p_positive, Rng& rng);

/// Two-community SBM conditioned on the sign vector: each pair is an edge
/// with probability (1 + eps/2) d/n if x_i = x_j and (1 - eps/2) d/n
/// otherwise.
Graph sample_sbm2_conditional(const SignVector& x, const ViewParams& params, Rng& rng);

/// k-community SBM conditioned on z: in-community probability
/// (1 + (1 - 1/k) eps) d/n, cross-community (1 - eps/k) d/n.
Graph sample_sbm_k_conditional(const LabelVector& z, double d, double eps, Rng& rng);

/// Joint draw (z, G) from the k-community SBM.
std::pair<LabelVector, Graph> sample_sbm_k(int n, int k, double d, double eps, Rng& rng);

/// Balanced when every community size lies in [(1 - n^-a) n/k, (1 + n^-a) n/k].
bool is_balanced(const LabelVector& z, double slack_exponent = 0.25);

}  // namespace mvsbm
