#include "mvsbm/rng.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace mvsbm;

TEST_CASE("same seed and stream give the same sequence")
{
    Rng a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    bool differs_c = false, differs_d = false;
    for (int i = 0; i < 100; ++i) {
        const auto x = a();
        CHECK(x == b());
        differs_c = differs_c || x != c();
        differs_d = differs_d || x != d();
    }
    CHECK(differs_c);
    CHECK(differs_d);
}

TEST_CASE("split does not advance the parent and children differ")
{
    Rng parent(5);
    const auto before = parent.counter();
    Rng c0 = parent.split(0);
    Rng c1 = parent.split(1);
    CHECK(parent.counter() == before);
    CHECK(c0() != c1());
    Rng again = parent.split(0);
    Rng c0b = parent.split(0);
    CHECK(again() == c0b());
}

TEST_CASE("uniform_int stays in range and is close to uniform")
{
    Rng rng(1);
    constexpr int bins = 7;
    constexpr int draws = 70000;
    std::vector<int> counts(bins, 0);
    for (int i = 0; i < draws; ++i) {
        const auto v = rng.uniform_int(bins);
        REQUIRE(v < bins);
        ++counts[v];
    }
    double chi2 = 0.0;
    for (const int c : counts)
        chi2 += (c - draws / bins) * (c - draws / bins) / double(draws / bins);
    // 6 degrees of freedom; 0.999 quantile is 22.46
    CHECK(chi2 < 22.46);
}

TEST_CASE("uniform lies in [0, 1) with the right mean")
{
    Rng rng(2);
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    // sd of the mean is sqrt(1/12 / 1e5) ~ 9.1e-4
    CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.004));
}

TEST_CASE("geometric_skip has mean (1 - p) / p and handles the endpoints")
{
    Rng rng(3);
    CHECK(rng.geometric_skip(0.0) == Rng::max());
    CHECK(rng.geometric_skip(1.0) == 0);
    const double p = 0.2;
    double sum = 0.0, sq = 0.0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        const double g = static_cast<double>(rng.geometric_skip(p));
        sum += g;
        sq += g * g;
    }
    const double mean = sum / draws;
    const double var = (1 - p) / (p * p);
    CHECK(std::abs(mean - (1 - p) / p) < 4 * std::sqrt(var / draws));
}

TEST_CASE("bernoulli frequencies and sign balance")
{
    Rng rng(4);
    long long hits = 0, plus = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        hits += rng.bernoulli(0.3) ? 1 : 0;
        plus += rng.sign() == 1 ? 1 : 0;
    }
    CHECK(std::abs(test_support::z_score(hits, draws, 0.3)) < 4);
    CHECK(std::abs(test_support::z_score(plus, draws, 0.5)) < 4);
    CHECK_FALSE(rng.bernoulli(0.0));
    CHECK(rng.bernoulli(1.0));
}

TEST_CASE("random_permutation is a permutation and random_subset is sorted and distinct")
{
    Rng rng(6);
    for (int n : {1, 2, 10, 257}) {
        auto p = random_permutation(n, rng);
        std::sort(p.begin(), p.end());
        for (int i = 0; i < n; ++i)
            REQUIRE(p[static_cast<std::size_t>(i)] == i);
    }
    for (int m : {0, 1, 5, 50}) {
        const auto s = random_subset(50, m, rng);
        REQUIRE(static_cast<int>(s.size()) == m);
        CHECK(std::is_sorted(s.begin(), s.end()));
        CHECK(std::set<int>(s.begin(), s.end()).size() == s.size());
        for (int v : s)
            CHECK((v >= 0 && v < 50));
    }
}

TEST_CASE("random_subset includes each element with probability m / n")
{
    Rng rng(7);
    std::vector<int> hits(20, 0);
    const int reps = 20000;
    for (int r = 0; r < reps; ++r)
        for (int v : random_subset(20, 5, rng))
            ++hits[static_cast<std::size_t>(v)];
    for (int h : hits)
        CHECK(std::abs(test_support::z_score(h, reps, 0.25)) < 4.5);
}
