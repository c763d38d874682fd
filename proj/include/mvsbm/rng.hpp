#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace mvsbm {

/// Counter-based generator: the i-th draw is a pure function of
/// (seed, stream, i). Child streams obtained with split() are independent of
/// the parent and of each other, and do not advance the parent.
///
/// Satisfies UniformRandomBitGenerator, but the helpers below are preferred
/// because they are bit-identical across standard library implementations.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()();

    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform();
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t uniform_int(std::uint64_t bound);
    bool bernoulli(double p);
    /// +1 or -1 with equal probability.
    int sign();

    /// Number of failures before the first success of a Bernoulli(p) sequence.
    /// Returns max() when p == 0.
    std::uint64_t geometric_skip(double p);

    Rng split(std::uint64_t child) const;

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }
    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t x);

template <typename T>
void shuffle(std::span<T> values, Rng& rng)
{
    for (std::size_t i = values.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.uniform_int(i));
        std::swap(values[i - 1], values[j]);
    }
}

/// Uniform random permutation of 0..n-1.
std::vector<int> random_permutation(int n, Rng& rng);

/// Uniform subset of size m of 0..n-1, returned sorted ascending.
std::vector<int> random_subset(int n, int m, Rng& rng);

}  // namespace mvsbm
