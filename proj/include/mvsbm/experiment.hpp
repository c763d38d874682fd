#pragma once

#include "mvsbm/baselines.hpp"
#include "mvsbm/estimators.hpp"
#include "mvsbm/instance.hpp"
#include "mvsbm/labels.hpp"
#include "mvsbm/rng.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mvsbm {

enum class FusionMethod { late, early_louvain, early_spectral };

/// Where late fusion gets its per-view estimates: from the graph (using
/// EstimatorConfig::method), from the true signs, or from the true signs
/// sent through a binary symmetric channel.
enum class EstimateSource { graph, oracle, bsc };

std::string to_string(FusionMethod m);
FusionMethod parse_fusion_method(const std::string& s);
std::string to_string(EstimatorMethod m);
EstimatorMethod parse_estimator_method(const std::string& s);

struct PipelineConfig {
    EstimatorConfig estimator;
    EstimateSource source = EstimateSource::graph;
    double bsc_alpha = 0.5;
    /// Record pairwise_correlation of every late-fusion estimate.
    bool view_correlations = false;
};

struct MethodRun {
    LabelVector labels;
    double agreement = 0.0;
    std::vector<double> view_correlations;  // late fusion only
    double elapsed_ms = 0.0;
};

/// Clusters the instance into instance.k() labels and scores the result.
MethodRun run_method(const MVInstance& instance, FusionMethod method, const PipelineConfig& cfg, Rng& rng);

/// Stream id used to derive per-trial generators Rng(seed + trial, stream).
inline constexpr std::uint64_t trial_stream = 0x7472'6961'6cULL;

Rng trial_rng(std::uint64_t seed, int trial);

enum class SweepParam { n, k, t, d, eps };

std::string to_string(SweepParam p);
SweepParam parse_sweep_param(const std::string& s);

struct ExperimentConfig {
    int n = 1000;
    int k = 10;
    int t = 10;
    double d = 50.0;
    double eps = 1.0;
    int trials = 20;
    std::uint64_t seed = 0;
    std::vector<FusionMethod> methods{FusionMethod::late, FusionMethod::early_louvain};
    PipelineConfig pipeline;

    SweepParam param = SweepParam::eps;
    double from = 0.5;
    double to = 1.5;
    double step = 0.25;

    void validate() const;
    /// from, from + step, ... up to `to` (inclusive, with rounding slack).
    std::vector<double> sweep_values() const;
};

struct SweepRow {
    SweepParam param = SweepParam::eps;
    double value = 0.0;
    FusionMethod method = FusionMethod::late;
    double mean_agreement = 0.0;
    double std_agreement = 0.0;  // sample standard deviation over trials
    int trials = 0;
    std::uint64_t seed = 0;
    double elapsed_ms = 0.0;
    std::vector<double> agreements;
};

/// Runs every (value, method) cell. Trial i of every cell draws its
/// instance from trial_rng(seed, i), so methods see the same instances.
/// Trials run on the worker pool; rows come back sorted by value, then
/// method name.
std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg);

/// "param,value,method,mean_agreement,std_agreement,trials,seed,elapsed_ms".
/// With `omit_timing` elapsed_ms is written as 0 so output is byte-stable.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool omit_timing);

/// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace mvsbm
