#include "mvsbm/bounds.hpp"
#include "mvsbm/sampling.hpp"

#include <doctest.h>

#include <cmath>

using namespace mvsbm;

namespace {

// Natural-log forms, written independently of the library.
double h2_ref(double p)
{
    if (p <= 0.0 || p >= 1.0)
        return 0.0;
    return -(p * std::log(p) + (1 - p) * std::log(1 - p)) / std::log(2.0);
}

double l_ref(double beta, int k)
{
    return (std::log(double(k)) - (1 - beta) * std::log(double(k - 1))) / std::log(2.0) - h2_ref(beta);
}

}  // namespace

TEST_CASE("binary entropy")
{
    CHECK(binary_entropy(0.5) == 1.0);
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    for (int i = 1; i < 100; ++i) {
        const double p = i / 100.0;
        CHECK(std::abs(binary_entropy(p) - binary_entropy(1 - p)) < 1e-12);
        CHECK(binary_entropy(p) == doctest::Approx(h2_ref(p)).epsilon(1e-12));
        CHECK((binary_entropy(p) >= 0.0 && binary_entropy(p) <= 1.0));
    }
    CHECK_THROWS_AS(binary_entropy(-0.1), InvalidParameter);
    CHECK_THROWS_AS(binary_entropy(1.1), InvalidParameter);
    CHECK(binary_entropy(0.25f) == doctest::Approx(h2_ref(0.25)).epsilon(1e-6));
}

TEST_CASE("excess information function")
{
    for (int k = 2; k <= 64; ++k) {
        CHECK(std::abs(excess_info(1.0 / k, k)) < 1e-12);
        // stationary at 1/k
        const double h = 1e-5;
        const double slope = (excess_info(1.0 / k + h, k) - excess_info(1.0 / k - h, k)) / (2 * h);
        CHECK(std::abs(slope) < 1e-6);
    }
    for (int i = 1; i < 100; ++i) {
        const double beta = i / 100.0;
        CHECK(excess_info(beta, 7) == doctest::Approx(l_ref(beta, 7)).epsilon(1e-12));
    }
    // convex: positive second differences on a grid
    const double h = 1e-3;
    for (int i = 1; i <= 100; ++i) {
        const double beta = 0.005 + 0.0099 * (i - 1);
        if (beta - h <= 0 || beta + h >= 1)
            continue;
        CHECK(excess_info(beta + h, 10) - 2 * excess_info(beta, 10) + excess_info(beta - h, 10) > 0.0);
    }
    const int big = 1 << 20;
    CHECK(std::abs(excess_info(1.0 / big + 0.3, big) / std::log2(double(big)) - 0.3) < 0.05);
    CHECK_THROWS_AS(excess_info(0.5, 1), InvalidParameter);
    CHECK_THROWS_AS(excess_info(0.0, 4), InvalidParameter);
    CHECK_THROWS_AS(excess_info(1.0, 4), InvalidParameter);
}

TEST_CASE("blackbox lower bound on t")
{
    BoundParams p;
    p.k = 2;
    p.rho = 0.4;
    p.alpha_bar = 1.0;
    CHECK(blackbox_lower_bound_t(p) == doctest::Approx(l_ref(0.9, 2) / 2).epsilon(1e-12));

    p.rho = 0.0;
    CHECK(blackbox_lower_bound_t(p) == 0.0);

    p.k = 50;
    p.rho = 0.2;
    p.tau = 0.8;
    p.c_abs = 1.5;
    const double base = blackbox_lower_bound_t(p);
    CHECK(base == doctest::Approx(0.8 * l_ref(0.22, 50) / (2 * 1.5 * 1.0)).epsilon(1e-12));
    p.alpha_bar = 2.0;
    CHECK(blackbox_lower_bound_t(p) == base / 2);

    // frozen fixture: k = 1024, rho = 0.3, tau = 0.99, alpha_bar = 0.5, C = 1
    BoundParams f;
    f.k = 1024;
    f.rho = 0.3;
    f.tau = 0.99;
    f.alpha_bar = 0.5;
    f.c_abs = 1.0;
    CHECK(blackbox_lower_bound_t(f) == doctest::Approx(0.99 * l_ref(1.0 / 1024 + 0.3, 1024)).epsilon(1e-12));
    CHECK(blackbox_lower_bound_t(f) == doctest::Approx(2.106986883851894).epsilon(1e-12));

    BoundParams bad;
    bad.k = 1;
    CHECK_THROWS_AS(blackbox_lower_bound_t(bad), InvalidParameter);
    bad = {};
    bad.rho = 0.6;  // 1/2 + 0.6 > 1
    CHECK_THROWS_AS(blackbox_lower_bound_t(bad), InvalidParameter);
    bad = {};
    bad.tau = 0.0;
    CHECK_THROWS_AS(blackbox_lower_bound_t(bad), InvalidParameter);
    bad = {};
    bad.alpha_bar = 0.0;
    CHECK_THROWS_AS(blackbox_lower_bound_t(bad), InvalidParameter);
    bad = {};
    bad.c_abs = -1.0;
    CHECK_THROWS_AS(blackbox_lower_bound_t(bad), InvalidParameter);
}

TEST_CASE("binary symmetric channel estimate")
{
    Rng rng(1);
    const SignVector x = sample_sign_vector(60, 0.5, rng);
    const auto exact = bsc_alpha_estimate(x, 2.0, rng);
    CHECK(exact.values() == oracle_estimate(x).values());
    CHECK(bsc_flip_probability(2.0) == 0.0);
    CHECK(bsc_flip_probability(0.5) == doctest::Approx(0.25));

    const auto noisy = bsc_alpha_estimate(x, 0.3, rng);
    for (int i = 0; i < 60; ++i)
        for (int j = 0; j < 60; ++j) {
            REQUIRE(std::abs(noisy(i, j)) == 1.0);
            for (int l = 0; l < 60; l += 7)
                REQUIRE(noisy(i, j) * noisy(j, l) == noisy(i, l) * noisy(j, j));
        }
    CHECK_THROWS_AS(bsc_alpha_estimate(x, 2.5, rng), InvalidParameter);
    CHECK_THROWS_AS(bsc_alpha_estimate(x, 0.0, rng), InvalidParameter);
}

TEST_CASE("channel flips match the flip probability")
{
    Rng rng(2);
    const SignVector x(std::vector<int>(200000, 1));
    const SignVector y = bsc_channel(x, 0.5, rng);
    long long flips = 0;
    for (int i = 0; i < y.size(); ++i)
        flips += y[i] == -1 ? 1 : 0;
    const double p = 0.25;
    CHECK(std::abs(flips - 200000 * p) < 4 * std::sqrt(200000 * p * (1 - p)));
}

TEST_CASE("mutual information bound")
{
    CHECK(bsc_mutual_info_bound(2.0, 100) == 100.0);
    CHECK(bsc_mutual_info_bound(1e-9, 100) < 1e-6);
    double previous = 0.0;
    for (int i = 1; i <= 200; ++i) {
        const double alpha = i / 100.0;
        const double b = bsc_mutual_info_bound(alpha, 1000);
        CHECK(b > previous);
        previous = b;
        if (alpha <= 0.5)
            CHECK(b <= 2 * alpha * 1000);
        CHECK(b == doctest::Approx(1000 * (1 - h2_ref(0.5 + std::sqrt(alpha / 8)))).epsilon(1e-10));
    }
    CHECK_THROWS_AS(bsc_mutual_info_bound(3.0, 10), InvalidParameter);
    CHECK_THROWS_AS(bsc_mutual_info_bound(0.5, 0), InvalidParameter);
}
