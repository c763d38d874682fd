#include "mvsbm/experiment.hpp"

#include "mvsbm/bounds.hpp"
#include "mvsbm/error.hpp"
#include "mvsbm/fusion.hpp"
#include "mvsbm/metrics.hpp"
#include "mvsbm/parallel.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>

namespace mvsbm {

std::string to_string(FusionMethod m)
{
    switch (m) {
    case FusionMethod::late:
        return "late";
    case FusionMethod::early_louvain:
        return "early-louvain";
    case FusionMethod::early_spectral:
        return "early-spectral";
    }
    return "?";
}

FusionMethod parse_fusion_method(const std::string& s)
{
    if (s == "late")
        return FusionMethod::late;
    if (s == "early-louvain")
        return FusionMethod::early_louvain;
    if (s == "early-spectral")
        return FusionMethod::early_spectral;
    throw InvalidParameter("unknown fusion method '" + s + "' (expected late, early-louvain or early-spectral)");
}

std::string to_string(EstimatorMethod m)
{
    switch (m) {
    case EstimatorMethod::combined:
        return "combined";
    case EstimatorMethod::degree_product:
        return "degree-product";
    case EstimatorMethod::spectral:
        return "spectral";
    case EstimatorMethod::louvain:
        return "louvain";
    }
    return "?";
}

EstimatorMethod parse_estimator_method(const std::string& s)
{
    if (s == "combined")
        return EstimatorMethod::combined;
    if (s == "degree-product")
        return EstimatorMethod::degree_product;
    if (s == "spectral")
        return EstimatorMethod::spectral;
    if (s == "louvain")
        return EstimatorMethod::louvain;
    throw InvalidParameter("unknown estimator '" + s + "'");
}

std::string to_string(SweepParam p)
{
    switch (p) {
    case SweepParam::n:
        return "n";
    case SweepParam::k:
        return "k";
    case SweepParam::t:
        return "t";
    case SweepParam::d:
        return "d";
    case SweepParam::eps:
        return "eps";
    }
    return "?";
}

SweepParam parse_sweep_param(const std::string& s)
{
    for (const auto p : {SweepParam::n, SweepParam::k, SweepParam::t, SweepParam::d, SweepParam::eps})
        if (to_string(p) == s)
            return p;
    throw InvalidParameter("unknown sweep parameter '" + s + "' (expected n, k, t, d or eps)");
}

namespace {

double elapsed_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

double correlation_or_nan(const PairwiseEstimate& est, const SignVector& signs)
{
    try {
        return pairwise_correlation(est, signs);
    } catch (const InsufficientData&) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

}  // namespace

MethodRun run_method(const MVInstance& instance, FusionMethod method, const PipelineConfig& cfg, Rng& rng)
{
    const int k = instance.k();
    const auto start = std::chrono::steady_clock::now();
    MethodRun out;

    switch (method) {
    case FusionMethod::early_louvain:
        out.labels = early_fusion_cluster(instance, k, EarlyFusionMethod::louvain, rng);
        break;
    case FusionMethod::early_spectral:
        out.labels = early_fusion_cluster(instance, k, EarlyFusionMethod::spectral, rng);
        break;
    case FusionMethod::late:
        if (cfg.source == EstimateSource::graph) {
            const auto graphs = instance.graphs();
            const auto params = instance.view_params();
            EstimateObserver observer;
            if (cfg.view_correlations) {
                observer = [&](int view, const PairwiseEstimate& est) {
                    out.view_correlations.push_back(
                        correlation_or_nan(est, instance.views()[static_cast<std::size_t>(view)].signs));
                };
            }
            out.labels = late_fusion_cluster(graphs, params, k, cfg.estimator, rng, observer);
        } else {
            const Rng base = rng.split(rng());
            std::vector<PairwiseEstimate> estimates;
            estimates.reserve(instance.views().size());
            for (std::size_t l = 0; l < instance.views().size(); ++l) {
                const SignVector& signs = instance.views()[l].signs;
                Rng view_rng = base.split(l);
                estimates.push_back(cfg.source == EstimateSource::oracle ? oracle_estimate(signs)
                                                                         : bsc_alpha_estimate(signs, cfg.bsc_alpha, view_rng));
                if (cfg.view_correlations)
                    out.view_correlations.push_back(correlation_or_nan(estimates.back(), signs));
            }
            Rng round_rng = base.split(instance.views().size());
            out.labels = late_fusion_from_estimates(estimates, k, round_rng);
        }
        break;
    }
    out.agreement = agreement(out.labels, instance.labels(), k);
    out.elapsed_ms = elapsed_since(start);
    return out;
}

Rng trial_rng(std::uint64_t seed, int trial)
{
    return Rng(seed + static_cast<std::uint64_t>(trial), trial_stream);
}

void ExperimentConfig::validate() const
{
    if (trials < 1)
        throw InvalidParameter("trials must be at least 1");
    if (methods.empty())
        throw InvalidParameter("at least one method is required");
    if (!(step > 0.0))
        throw InvalidParameter("sweep step must be positive");
    if (!(from <= to))
        throw InvalidParameter("sweep range is empty (from > to)");
    pipeline.estimator.validate();
    if (pipeline.source == EstimateSource::bsc && !(pipeline.bsc_alpha > 0.0 && pipeline.bsc_alpha <= 2.0))
        throw InvalidParameter("bsc alpha must lie in (0, 2]");
}

std::vector<double> ExperimentConfig::sweep_values() const
{
    std::vector<double> out;
    const double slack = 1e-9 * step;
    for (long long i = 0;; ++i) {
        const double v = from + static_cast<double>(i) * step;
        if (v > to + slack)
            break;
        // 12 significant digits absorb the accumulated rounding of i * step
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
        double clean = v;
        std::from_chars(buf, res.ptr, clean);
        out.push_back(clean);
    }
    return out;
}

namespace {

struct CellParams {
    int n, k, t;
    double d, eps;
};

CellParams cell_params(const ExperimentConfig& cfg, double value)
{
    CellParams p{cfg.n, cfg.k, cfg.t, cfg.d, cfg.eps};
    auto as_int = [&](const char* name) {
        const double r = std::round(value);
        if (std::abs(r - value) > 1e-9)
            throw InvalidParameter(std::string("sweep value for ") + name + " must be an integer");
        return static_cast<int>(r);
    };
    switch (cfg.param) {
    case SweepParam::n:
        p.n = as_int("n");
        break;
    case SweepParam::k:
        p.k = as_int("k");
        break;
    case SweepParam::t:
        p.t = as_int("t");
        break;
    case SweepParam::d:
        p.d = value;
        break;
    case SweepParam::eps:
        p.eps = value;
        break;
    }
    if (p.n < 2)
        throw InvalidParameter("n must be at least 2");
    if (p.k < 1)
        throw InvalidParameter("k must be at least 1");
    if (p.t < 1)
        throw InvalidParameter("t must be at least 1");
    return p;
}

}  // namespace

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg)
{
    cfg.validate();
    const auto values = cfg.sweep_values();
    std::vector<FusionMethod> methods = cfg.methods;
    std::sort(methods.begin(), methods.end(), [](FusionMethod a, FusionMethod b) { return to_string(a) < to_string(b); });
    methods.erase(std::unique(methods.begin(), methods.end()), methods.end());

    std::vector<SweepRow> rows;
    for (const double value : values) {
        const CellParams p = cell_params(cfg, value);
        const std::vector<ViewParams> views(static_cast<std::size_t>(p.t), ViewParams(p.d, p.eps));

        // results[trial][method]
        std::vector<std::vector<MethodRun>> results(static_cast<std::size_t>(cfg.trials));
        parallel_for(0, static_cast<std::size_t>(cfg.trials), [&](std::size_t trial) {
            Rng rng = trial_rng(cfg.seed, static_cast<int>(trial));
            const MVInstance instance = sample_mv_instance(p.n, p.k, views, rng);
            auto& slot = results[trial];
            for (const FusionMethod m : methods) {
                Rng method_rng = rng.split(100 + static_cast<std::uint64_t>(m));
                slot.push_back(run_method(instance, m, cfg.pipeline, method_rng));
            }
        });

        for (std::size_t mi = 0; mi < methods.size(); ++mi) {
            SweepRow row;
            row.param = cfg.param;
            row.value = value;
            row.method = methods[mi];
            row.trials = cfg.trials;
            row.seed = cfg.seed;
            for (const auto& trial : results) {
                row.agreements.push_back(trial[mi].agreement);
                row.elapsed_ms += trial[mi].elapsed_ms;
            }
            double sum = 0.0;
            for (const double a : row.agreements)
                sum += a;
            row.mean_agreement = sum / static_cast<double>(row.trials);
            if (row.trials > 1) {
                double ss = 0.0;
                for (const double a : row.agreements)
                    ss += (a - row.mean_agreement) * (a - row.mean_agreement);
                row.std_agreement = std::sqrt(ss / static_cast<double>(row.trials - 1));
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string format_double(double v)
{
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool omit_timing)
{
    out << "param,value,method,mean_agreement,std_agreement,trials,seed,elapsed_ms\n";
    for (const auto& r : rows) {
        const long long ms = omit_timing ? 0 : std::llround(r.elapsed_ms);
        out << to_string(r.param) << ',' << format_double(r.value) << ',' << to_string(r.method) << ','
            << format_double(r.mean_agreement) << ',' << format_double(r.std_agreement) << ',' << r.trials << ','
            << r.seed << ',' << ms << '\n';
    }
}

}  // namespace mvsbm
