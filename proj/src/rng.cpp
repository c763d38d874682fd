#include "mvsbm/rng.hpp"

#include "mvsbm/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mvsbm {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t x)
{
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), key_(mix64(seed ^ mix64(stream + kGamma)))
{
}

Rng::result_type Rng::operator()()
{
    ++counter_;
    return mix64(key_ + counter_ * kGamma);
}

double Rng::uniform()
{
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_int(std::uint64_t bound)
{
    if (bound == 0)
        throw InvalidParameter("uniform_int: bound must be positive");
    // Lemire's multiply-shift with rejection.
    unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<unsigned __int128>((*this)()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

bool Rng::bernoulli(double p)
{
    return uniform() < p;
}

int Rng::sign()
{
    return ((*this)() >> 63) ? 1 : -1;
}

std::uint64_t Rng::geometric_skip(double p)
{
    if (p <= 0.0)
        return max();
    if (p >= 1.0)
        return 0;
    const double u = 1.0 - uniform();  // (0, 1]
    const double skip = std::floor(std::log(u) / std::log1p(-p));
    if (skip >= 1.8e19)
        return max();
    return static_cast<std::uint64_t>(skip);
}

Rng Rng::split(std::uint64_t child) const
{
    return Rng(seed_, mix64(stream_ * kGamma + mix64(child ^ 0xD1B54A32D192ED03ULL)));
}

std::vector<int> random_permutation(int n, Rng& rng)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    shuffle(std::span<int>(p), rng);
    return p;
}

std::vector<int> random_subset(int n, int m, Rng& rng)
{
    if (m < 0 || m > n)
        throw InvalidParameter("random_subset: need 0 <= m <= n");
    // Partial Fisher-Yates over an identity array.
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (int i = 0; i < m; ++i) {
        const auto j = i + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n - i)));
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    }
    p.resize(static_cast<std::size_t>(m));
    std::sort(p.begin(), p.end());
    return p;
}

}  // namespace mvsbm
