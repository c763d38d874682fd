#pragma once

#include "mvsbm/fusion.hpp"
#include "mvsbm/labels.hpp"

#include <vector>

namespace mvsbm {

/// counts[a][b] = |{i : z_hat_i = a + 1, z_i = b + 1}|
struct ConfusionMatrix {
    std::vector<std::vector<long long>> counts;
    long long n = 0;

    int k() const { return static_cast<int>(counts.size()); }
};

/// Throws InvalidInput on a length mismatch or a label outside [1..k].
ConfusionMatrix confusion_matrix(const LabelVector& z_hat, const LabelVector& z, int k);

/// Maximum over column permutations of the matched total (Hungarian method).
long long max_assignment(const std::vector<std::vector<long long>>& weights);

/// max over permutations pi of (1/n) #{i : z_hat_i = pi(z_i)}.
double agreement(const LabelVector& z_hat, const LabelVector& z, int k);

/// Same value by enumerating all k! permutations. Refuses k > 8.
double agreement_bruteforce(const LabelVector& z_hat, const LabelVector& z, int k);

/// ||A_i - A*(z)_i||^2 for every row i.
std::vector<int> pair_misclassification(const NeighborhoodMatrix& a, const LabelVector& z);

}  // namespace mvsbm
