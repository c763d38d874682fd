#include "mvsbm/cli.hpp"

#include "mvsbm/baselines.hpp"
#include "mvsbm/bounds.hpp"
#include "mvsbm/error.hpp"
#include "mvsbm/experiment.hpp"
#include "mvsbm/instance.hpp"
#include "mvsbm/sampling.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace mvsbm {

namespace {

constexpr int dense_limit = 20000;

struct ModelOptions {
    int n = 1000;
    int k = 10;
    int t = 10;
    double d = 50.0;
    double eps = 1.0;
};

void add_model_options(CLI::App* cmd, ModelOptions& m)
{
    cmd->add_option("--n", m.n, "Number of vertices")->check(CLI::Range(2, 1 << 30))->capture_default_str();
    cmd->add_option("--k", m.k, "Number of communities")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--t", m.t, "Number of views")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--d", m.d, "Average degree per view")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--eps", m.eps, "Signal strength per view")->check(CLI::Range(0.0, 2.0))->capture_default_str();
}

struct EstimatorOptions {
    std::string estimator = "combined";
    double alpha = 0.5;
    double mu_prime = 0.05;
    double c_tilde = 10.0;
};

void add_estimator_options(CLI::App* cmd, EstimatorOptions& e)
{
    cmd->add_option("--estimator", e.estimator,
                    "Per-view estimator: combined, degree-product, spectral, louvain, oracle or bsc")
        ->check(CLI::IsMember({"combined", "degree-product", "spectral", "louvain", "oracle", "bsc"}))
        ->capture_default_str();
    cmd->add_option("--alpha", e.alpha, "Channel correlation for --estimator bsc")->capture_default_str();
    cmd->add_option("--mu-prime", e.mu_prime, "Balance threshold of the combined estimator")->capture_default_str();
    cmd->add_option("--c-tilde", e.c_tilde, "Truncation multiplier of the degree-product estimator")
        ->capture_default_str();
}

PipelineConfig pipeline_from(const EstimatorOptions& e)
{
    PipelineConfig p;
    p.estimator.mu_prime = e.mu_prime;
    p.estimator.c_tilde = e.c_tilde;
    p.bsc_alpha = e.alpha;
    if (e.estimator == "oracle") {
        p.source = EstimateSource::oracle;
    } else if (e.estimator == "bsc") {
        p.source = EstimateSource::bsc;
        if (!(e.alpha > 0.0 && e.alpha <= 2.0))
            throw InvalidParameter("--alpha must lie in (0, 2]");
    } else {
        p.estimator.method = parse_estimator_method(e.estimator);
    }
    p.estimator.validate();
    return p;
}

void check_dense_size(int n, bool needs_dense, bool allow_large)
{
    if (needs_dense && n > dense_limit && !allow_large)
        throw InvalidParameter("n = " + std::to_string(n) + " needs dense n x n matrices; pass --allow-large to proceed");
}

MVInstance generate(const ModelOptions& m, std::uint64_t seed, int index)
{
    const std::vector<ViewParams> views(static_cast<std::size_t>(m.t), ViewParams(m.d, m.eps));
    Rng rng = trial_rng(seed, index);
    return sample_mv_instance(m.n, m.k, views, rng);
}

MVInstance load_instance(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path + "' for reading");
    try {
        return read_instance(in);
    } catch (const ParseError& ex) {
        throw ParseError("'" + path + "': " + ex.what());
    }
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open '" + path + "' for writing");
    return f;
}

std::string numbered_path(const std::string& path, int index, int count)
{
    if (count == 1)
        return path;
    const std::filesystem::path p(path);
    std::filesystem::path out = p.parent_path() / (p.stem().string() + "_" + std::to_string(index));
    out += p.extension();
    return out.string();
}

/// Writes to the named file, or to `out` for "-".
template <typename Fn>
void with_output(const std::string& path, std::ostream& out, Fn&& fn)
{
    if (path == "-") {
        fn(out);
        return;
    }
    std::ofstream f = open_output(path);
    fn(f);
    f.flush();
    if (!f)
        throw IoError("write to '" + path + "' failed");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Multi-view stochastic block model toolkit: sampling, late and early fusion clustering, sweeps "
                 "and information bounds",
                 "mvsbm"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML/INI file with option values; command line flags win");
    std::uint64_t seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "Master seed (derived from entropy when omitted)");

    // sample
    auto* sample = app.add_subcommand("sample", "Generate multi-view instances and write them to files");
    ModelOptions sample_model;
    std::string sample_out;
    int sample_count = 1;
    add_model_options(sample, sample_model);
    sample->add_option("--out,-o", sample_out, "Output path (numbered when --count > 1)")->required();
    sample->add_option("--count", sample_count, "Number of instances")->check(CLI::PositiveNumber);

    // cluster
    auto* cluster = app.add_subcommand("cluster", "Cluster one instance and report agreement");
    ModelOptions cluster_model;
    EstimatorOptions cluster_est;
    std::string cluster_input;
    std::string cluster_method = "late";
    bool cluster_allow_large = false;
    add_model_options(cluster, cluster_model);
    add_estimator_options(cluster, cluster_est);
    cluster->add_option("--input,-i", cluster_input, "Instance file (generated from the model options otherwise)");
    cluster->add_option("--method,-m", cluster_method, "late, early-louvain or early-spectral")
        ->check(CLI::IsMember({"late", "early-louvain", "early-spectral"}))
        ->capture_default_str();
    cluster->add_flag("--allow-large", cluster_allow_large, "Permit dense methods above n = 20000");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Sweep one parameter and write mean agreement per method as CSV");
    ModelOptions sweep_model;
    EstimatorOptions sweep_est;
    std::string sweep_param = "eps";
    double sweep_from = 0.5, sweep_to = 1.5, sweep_step = 0.25;
    int sweep_trials = 20;
    std::vector<std::string> sweep_methods{"late", "early-louvain"};
    std::string sweep_out = "-";
    bool sweep_omit_timing = false;
    bool sweep_allow_large = false;
    add_model_options(sweep, sweep_model);
    add_estimator_options(sweep, sweep_est);
    sweep->add_option("--param", sweep_param, "Swept parameter")
        ->check(CLI::IsMember({"n", "k", "t", "d", "eps"}))
        ->capture_default_str();
    sweep->add_option("--from", sweep_from, "First value")->capture_default_str();
    sweep->add_option("--to", sweep_to, "Last value (inclusive)")->capture_default_str();
    sweep->add_option("--step", sweep_step, "Step")->capture_default_str();
    sweep->add_option("--trials", sweep_trials, "Trials per cell")->check(CLI::PositiveNumber)->capture_default_str();
    sweep->add_option("--methods", sweep_methods, "Methods to compare")
        ->delimiter(',')
        ->check(CLI::IsMember({"late", "early-louvain", "early-spectral"}));
    sweep->add_option("--out,-o", sweep_out, "CSV path, or - for stdout")->capture_default_str();
    sweep->add_flag("--omit-timing", sweep_omit_timing, "Write elapsed_ms as 0 for byte-stable output");
    sweep->add_flag("--allow-large", sweep_allow_large, "Permit dense methods above n = 20000");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Tabulate the lower bound on the number of views as CSV");
    std::vector<int> bounds_k{2, 10, 100};
    std::vector<double> bounds_rho{0.1};
    std::vector<double> bounds_alpha{0.5};
    double bounds_tau = 1.0;
    double bounds_c = 1.0;
    std::string bounds_out = "-";
    bounds->add_option("--k", bounds_k, "Community counts")->delimiter(',');
    bounds->add_option("--rho", bounds_rho, "Excess agreements")->delimiter(',');
    bounds->add_option("--alpha-bar", bounds_alpha, "Average view correlations")->delimiter(',');
    bounds->add_option("--tau", bounds_tau, "Success probability")->capture_default_str();
    bounds->add_option("--C,--c-abs", bounds_c, "Absolute constant")->capture_default_str();
    bounds->add_option("--out,-o", bounds_out, "CSV path, or - for stdout")->capture_default_str();

    // stats
    auto* stats = app.add_subcommand("stats", "Union graph edge statistics against the true labels");
    ModelOptions stats_model;
    std::string stats_input;
    add_model_options(stats, stats_model);
    stats->add_option("--input,-i", stats_input, "Instance file (generated from the model options otherwise)");

    for (auto* cmd : {sample, cluster, sweep, bounds, stats})
        cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        std::uint64_t seed = seed_value;
        if (seed_opt->count() == 0) {
            std::random_device rd;
            seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
            err << "seed: " << seed << '\n';
        }

        if (sample->parsed()) {
            for (int i = 0; i < sample_count; ++i) {
                const MVInstance instance = generate(sample_model, seed, i);
                const std::string path = numbered_path(sample_out, i, sample_count);
                with_output(path, out, [&](std::ostream& os) { write_instance(os, instance); });
            }
            return exit_ok;
        }

        if (cluster->parsed()) {
            const PipelineConfig pipeline = pipeline_from(cluster_est);
            const MVInstance instance =
                cluster_input.empty() ? generate(cluster_model, seed, 0) : load_instance(cluster_input);
            const FusionMethod method = parse_fusion_method(cluster_method);
            check_dense_size(instance.num_vertices(), method != FusionMethod::early_louvain, cluster_allow_large);
            PipelineConfig cfg = pipeline;
            cfg.view_correlations = true;
            Rng rng(seed, 0x636c7573ULL);
            const MethodRun run = run_method(instance, method, cfg, rng);
            out << "method: " << to_string(method) << '\n';
            if (method == FusionMethod::late)
                out << "estimator: " << cluster_est.estimator << '\n';
            out << "n: " << instance.num_vertices() << '\n';
            out << "k: " << instance.k() << '\n';
            out << "t: " << instance.num_views() << '\n';
            out << "agreement: " << format_double(run.agreement) << '\n';
            out << "runtime_ms: " << std::llround(run.elapsed_ms) << '\n';
            for (std::size_t l = 0; l < run.view_correlations.size(); ++l)
                out << "view " << l + 1 << " correlation: " << format_double(run.view_correlations[l]) << '\n';
            return exit_ok;
        }

        if (sweep->parsed()) {
            ExperimentConfig cfg;
            cfg.n = sweep_model.n;
            cfg.k = sweep_model.k;
            cfg.t = sweep_model.t;
            cfg.d = sweep_model.d;
            cfg.eps = sweep_model.eps;
            cfg.trials = sweep_trials;
            cfg.seed = seed;
            cfg.methods.clear();
            for (const auto& m : sweep_methods)
                cfg.methods.push_back(parse_fusion_method(m));
            cfg.pipeline = pipeline_from(sweep_est);
            cfg.param = parse_sweep_param(sweep_param);
            cfg.from = sweep_from;
            cfg.to = sweep_to;
            cfg.step = sweep_step;
            cfg.validate();
            bool needs_dense = false;
            for (const auto m : cfg.methods)
                needs_dense = needs_dense || m != FusionMethod::early_louvain;
            const int max_n = cfg.param == SweepParam::n ? static_cast<int>(std::lround(cfg.sweep_values().back())) : cfg.n;
            check_dense_size(max_n, needs_dense, sweep_allow_large);

            // open the target before the (long) sweep so a bad path fails fast
            std::ofstream file;
            if (sweep_out != "-")
                file = open_output(sweep_out);
            const auto rows = run_sweep(cfg);
            std::ostream& os = sweep_out == "-" ? out : file;
            write_sweep_csv(os, rows, sweep_omit_timing);
            os.flush();
            if (!os)
                throw IoError("write to '" + sweep_out + "' failed");
            return exit_ok;
        }

        if (bounds->parsed()) {
            std::ostringstream csv;
            csv << "k,rho,alpha_bar,tau,C,l_beta,t_min\n";
            for (const int k : bounds_k) {
                for (const double rho : bounds_rho) {
                    for (const double alpha : bounds_alpha) {
                        BoundParams p;
                        p.k = k;
                        p.rho = rho;
                        p.alpha_bar = alpha;
                        p.tau = bounds_tau;
                        p.c_abs = bounds_c;
                        const double t_min = blackbox_lower_bound_t(p);
                        const double l = rho == 0.0 ? 0.0 : excess_info(1.0 / k + rho, k);
                        csv << k << ',' << format_double(rho) << ',' << format_double(alpha) << ','
                            << format_double(bounds_tau) << ',' << format_double(bounds_c) << ',' << format_double(l)
                            << ',' << format_double(t_min) << '\n';
                    }
                }
            }
            with_output(bounds_out, out, [&](std::ostream& os) { os << csv.str(); });
            return exit_ok;
        }

        if (stats->parsed()) {
            const MVInstance instance = stats_input.empty() ? generate(stats_model, seed, 0) : load_instance(stats_input);
            const UnionStats s = union_edge_stats(instance);
            out << "p_in_hat: " << format_double(s.p_in_hat) << '\n';
            out << "p_out_hat: " << format_double(s.p_out_hat) << '\n';
            out << "d_star_hat: " << format_double(s.d_star_hat) << '\n';
            out << "d_star_sigma: " << format_double(s.d_star_sigma) << '\n';
            out << "eps_star_hat: " << format_double(s.eps_star_hat) << '\n';
            out << "ks_ratio: " << format_double(s.ks_ratio) << '\n';
            double d_total = 0.0;
            bool uniform_eps = true;
            const auto params = instance.view_params();
            for (const auto& p : params) {
                d_total += p.d;
                uniform_eps = uniform_eps && p.eps == params.front().eps;
            }
            for (std::size_t l = 0; l < params.size(); ++l)
                out << "view " << l + 1 << " delta: " << format_double(params[l].delta()) << '\n';
            if (uniform_eps && instance.k() >= 2 && s.eps_star_hat < instance.k()) {
                const UnionSandwich w = union_sandwich(d_total, params.front().eps, s.eps_star_hat, instance.k());
                out << "sandwich_lower: " << format_double(w.lower) << '\n';
                out << "sandwich_upper: " << format_double(w.upper) << '\n';
            }
            return exit_ok;
        }
    } catch (const InvalidParameter& ex) {
        err << "error: " << ex.what() << "\nRun with --help for usage.\n";
        return exit_usage;
    } catch (const IoError& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_io;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_numeric;
    }
    return exit_usage;
}

}  // namespace mvsbm
