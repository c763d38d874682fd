#include "mvsbm/baselines.hpp"
#include "mvsbm/error.hpp"
#include "mvsbm/metrics.hpp"
#include "mvsbm/sampling.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace mvsbm;

TEST_CASE("early fusion on identical two-clique views")
{
    const int n = 40;
    const Graph g = test_support::two_cliques(n);
    const LabelVector z = test_support::two_clique_labels(n);
    const std::vector<Graph> views(4, g);
    Rng rng(1);
    CHECK(agreement(early_fusion_cluster(views, 2, EarlyFusionMethod::louvain, rng), z, 2) == 1.0);
    CHECK(agreement(early_fusion_cluster(views, 2, EarlyFusionMethod::spectral, rng), z, 2) == 1.0);

    const LabelVector one = early_fusion_cluster(views, 1, EarlyFusionMethod::louvain, rng);
    CHECK(one == LabelVector(std::vector<int>(n, 1), 1));
    CHECK_THROWS_AS(early_fusion_cluster(std::vector<Graph>{}, 2, EarlyFusionMethod::louvain, rng), InvalidInput);
}

TEST_CASE("spectral early fusion is deterministic given the seed")
{
    Rng rng(2);
    const std::vector<ViewParams> views(3, ViewParams(10, 1.0));
    const MVInstance inst = sample_mv_instance(300, 3, views, rng);
    Rng a(5), b(5);
    CHECK(early_fusion_cluster(inst, 3, EarlyFusionMethod::spectral, a) ==
          early_fusion_cluster(inst, 3, EarlyFusionMethod::spectral, b));
}

TEST_CASE("community to label mapping keeps the k largest")
{
    Rng rng(3);
    // sizes: c0 = 1, c1 = 4, c2 = 3, c3 = 2
    const std::vector<int> comm{1, 1, 1, 1, 2, 2, 2, 3, 3, 0};
    const LabelVector z = communities_to_labels(comm, 2, rng);
    for (int i = 0; i < 4; ++i)
        CHECK(z[i] == 1);
    for (int i = 4; i < 7; ++i)
        CHECK(z[i] == 2);
    for (int i = 7; i < 10; ++i)
        CHECK((z[i] == 1 || z[i] == 2));
    const LabelVector all = communities_to_labels(comm, 6, rng);
    CHECK(all.community_sizes() == std::vector<int>{4, 3, 2, 1, 0, 0});
}

TEST_CASE("union edge statistics match a direct pair count")
{
    Rng rng(4);
    const std::vector<ViewParams> views(3, ViewParams(8, 1.0));
    const MVInstance inst = sample_mv_instance(300, 4, views, rng);
    const UnionStats s = union_edge_stats(inst);
    const Graph u = union_graph(inst);
    const LabelVector& z = inst.labels();
    long long in_e = 0, in_p = 0, out_e = 0, out_p = 0;
    for (int i = 0; i < 300; ++i)
        for (int j = i + 1; j < 300; ++j) {
            const bool e = u.has_edge(i, j);
            if (z[i] == z[j]) {
                ++in_p;
                in_e += e;
            } else {
                ++out_p;
                out_e += e;
            }
        }
    CHECK(s.in_edges == in_e);
    CHECK(s.in_pairs == in_p);
    CHECK(s.out_edges == out_e);
    CHECK(s.out_pairs == out_p);
    CHECK(s.p_in_hat == static_cast<double>(in_e) / in_p);
    CHECK(s.p_out_hat == static_cast<double>(out_e) / out_p);

    // fitted parameters reproduce both frequencies
    const double k = 4, n = 300;
    CHECK(s.d_star_hat / n * (1 + (1 - 1 / k) * s.eps_star_hat) == doctest::Approx(s.p_in_hat).epsilon(1e-12));
    CHECK(s.d_star_hat / n * (1 - s.eps_star_hat / k) == doctest::Approx(s.p_out_hat).epsilon(1e-12));
    CHECK(s.ks_ratio == doctest::Approx(s.d_star_hat * std::pow(s.eps_star_hat / k, 2)));
    CHECK(s.ks_ratio >= 0.0);
    CHECK(s.d_star_sigma > 0.0);
}

TEST_CASE("union statistics of a null view")
{
    Rng rng(5);
    const std::vector<ViewParams> views{ViewParams(30, 0.0)};
    const MVInstance inst = sample_mv_instance(2000, 5, views, rng);
    const UnionStats s = union_edge_stats(inst);
    CHECK(s.p_in_hat == doctest::Approx(30.0 / 2000).epsilon(0.1));
    CHECK(s.p_out_hat == doctest::Approx(30.0 / 2000).epsilon(0.05));
    CHECK(std::abs(s.eps_star_hat) < 0.15);
}

TEST_CASE("union statistics sign sanity and degenerate input")
{
    Rng rng(6);
    double gap = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
        const std::vector<ViewParams> views(4, ViewParams(20, 1.0));
        const auto s = union_edge_stats(sample_mv_instance(500, 3, views, rng));
        gap += s.p_in_hat - s.p_out_hat;
    }
    CHECK(gap > 0.0);

    const Graph cliques = test_support::two_cliques(10);
    CHECK_THROWS_AS(union_edge_stats(cliques, test_support::two_clique_labels(10)), DegenerateStatistics);
    CHECK_THROWS_AS(union_edge_stats(cliques, LabelVector(std::vector<int>(10, 1), 1)), DegenerateStatistics);
}

TEST_CASE("union sandwich formula")
{
    const auto w = union_sandwich(500, 1.0, 0.4, 10);
    CHECK(w.lower == doctest::Approx(500 * 1.5 / 1.36));
    CHECK(w.upper == doctest::Approx(500 * (1 + 4.0 / 9.6) / 1.36));
    CHECK_THROWS_AS(union_sandwich(500, 1.0, 10.0, 10), InvalidParameter);
}
