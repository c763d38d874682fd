#include "mvsbm/metrics.hpp"

#include "mvsbm/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace mvsbm {

namespace {

void check_labels(const LabelVector& v, int k, const char* name)
{
    for (const int label : v.labels())
        if (label < 1 || label > k)
            throw InvalidInput(std::string("agreement: ") + name + " has label " + std::to_string(label) +
                               " outside [1.." + std::to_string(k) + "]");
}

}  // namespace

ConfusionMatrix confusion_matrix(const LabelVector& z_hat, const LabelVector& z, int k)
{
    if (k < 1)
        throw InvalidParameter("agreement: k must be at least 1");
    if (z_hat.size() != z.size())
        throw InvalidInput("agreement: length mismatch (" + std::to_string(z_hat.size()) + " vs " +
                           std::to_string(z.size()) + ")");
    check_labels(z_hat, k, "z_hat");
    check_labels(z, k, "z");
    ConfusionMatrix out;
    out.counts.assign(static_cast<std::size_t>(k), std::vector<long long>(static_cast<std::size_t>(k), 0));
    out.n = z.size();
    for (int i = 0; i < z.size(); ++i)
        ++out.counts[static_cast<std::size_t>(z_hat[i] - 1)][static_cast<std::size_t>(z[i] - 1)];
    return out;
}

long long max_assignment(const std::vector<std::vector<long long>>& weights)
{
    // Shortest augmenting path form of the Hungarian method on cost = -weight,
    // 1-based potentials u (rows) and v (columns).
    const auto k = static_cast<int>(weights.size());
    if (k == 0)
        return 0;
    const long long inf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> u(static_cast<std::size_t>(k) + 1, 0), v(static_cast<std::size_t>(k) + 1, 0);
    std::vector<int> match(static_cast<std::size_t>(k) + 1, 0), way(static_cast<std::size_t>(k) + 1, 0);
    auto cost = [&](int r, int c) { return -weights[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]; };

    for (int r = 1; r <= k; ++r) {
        match[0] = r;
        int c0 = 0;
        std::vector<long long> minv(static_cast<std::size_t>(k) + 1, inf);
        std::vector<char> used(static_cast<std::size_t>(k) + 1, 0);
        do {
            used[static_cast<std::size_t>(c0)] = 1;
            const int r0 = match[static_cast<std::size_t>(c0)];
            long long delta = inf;
            int c1 = 0;
            for (int c = 1; c <= k; ++c) {
                if (used[static_cast<std::size_t>(c)])
                    continue;
                const long long cur = cost(r0, c) - u[static_cast<std::size_t>(r0)] - v[static_cast<std::size_t>(c)];
                if (cur < minv[static_cast<std::size_t>(c)]) {
                    minv[static_cast<std::size_t>(c)] = cur;
                    way[static_cast<std::size_t>(c)] = c0;
                }
                if (minv[static_cast<std::size_t>(c)] < delta) {
                    delta = minv[static_cast<std::size_t>(c)];
                    c1 = c;
                }
            }
            for (int c = 0; c <= k; ++c) {
                if (used[static_cast<std::size_t>(c)]) {
                    u[static_cast<std::size_t>(match[static_cast<std::size_t>(c)])] += delta;
                    v[static_cast<std::size_t>(c)] -= delta;
                } else {
                    minv[static_cast<std::size_t>(c)] -= delta;
                }
            }
            c0 = c1;
        } while (match[static_cast<std::size_t>(c0)] != 0);
        do {
            const int c1 = way[static_cast<std::size_t>(c0)];
            match[static_cast<std::size_t>(c0)] = match[static_cast<std::size_t>(c1)];
            c0 = c1;
        } while (c0 != 0);
    }

    long long total = 0;
    for (int c = 1; c <= k; ++c)
        total += weights[static_cast<std::size_t>(match[static_cast<std::size_t>(c)] - 1)][static_cast<std::size_t>(c - 1)];
    return total;
}

double agreement(const LabelVector& z_hat, const LabelVector& z, int k)
{
    const ConfusionMatrix cm = confusion_matrix(z_hat, z, k);
    if (cm.n == 0)
        return 1.0;
    return static_cast<double>(max_assignment(cm.counts)) / static_cast<double>(cm.n);
}

double agreement_bruteforce(const LabelVector& z_hat, const LabelVector& z, int k)
{
    if (k > 8)
        throw InvalidParameter("agreement_bruteforce: k = " + std::to_string(k) + " exceeds 8");
    const ConfusionMatrix cm = confusion_matrix(z_hat, z, k);
    if (cm.n == 0)
        return 1.0;
    std::vector<int> pi(static_cast<std::size_t>(k));
    std::iota(pi.begin(), pi.end(), 0);
    long long best = 0;
    do {
        long long matched = 0;
        for (int b = 0; b < k; ++b)
            matched += cm.counts[static_cast<std::size_t>(pi[static_cast<std::size_t>(b)])][static_cast<std::size_t>(b)];
        best = std::max(best, matched);
    } while (std::next_permutation(pi.begin(), pi.end()));
    return static_cast<double>(best) / static_cast<double>(cm.n);
}

std::vector<int> pair_misclassification(const NeighborhoodMatrix& a, const LabelVector& z)
{
    if (a.n() != z.size())
        throw InvalidInput("pair_misclassification: size mismatch");
    const NeighborhoodMatrix truth = community_matrix(z);
    std::vector<int> out(static_cast<std::size_t>(a.n()));
    for (int i = 0; i < a.n(); ++i)
        out[static_cast<std::size_t>(i)] = a.row_distance(i, truth, i);
    return out;
}

}  // namespace mvsbm
