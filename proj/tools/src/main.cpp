#include "nullprop/cli/run.hpp"
#include "nullprop/version.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

using namespace nullprop;
using namespace nullprop::cli;

namespace
{

struct RawOptions
{
    std::string input_format = "auto";
    std::vector<std::string> deltas;
    std::string sequence;
    std::vector<std::string> intervals;
    std::vector<std::string> nus;
    std::string format = "json";
    std::string output;
    std::string cache;
    std::string input;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, RunConfig& config, RawOptions& raw)
{
    cmd->add_option("--alpha", config.alpha, "Confidence level parameter alpha in (0,1)")
        ->capture_default_str();
    cmd->add_option("--format", raw.format, "Output format: json|csv")->capture_default_str();
    cmd->add_option("-o,--output", raw.output, "Write the artifact here instead of stdout");
    cmd->add_option("--workers", config.workers,
                    "Cap on parallel workers (0 = all cores); results do not depend on it");
}

void add_seed(CLI::App* cmd, RawOptions& raw)
{
    cmd->add_option("--seed", raw.seed, "Master seed; drawn and recorded when omitted");
}

void add_delta(CLI::App* cmd, RawOptions& raw)
{
    cmd->add_option("--delta", raw.deltas, "Bounding function(s): stddev|constant|linear")
        ->delimiter(',');
    cmd->add_option("--sequence", raw.sequence,
                    "Bounding sequence: daniels|dkw|gumbel|monte_carlo (default: the function's analytic partner)");
    cmd->add_option("--interval", raw.intervals,
                    "Supremum interval: trunc (1/n,1-1/n), unit (0,1) or lo,hi with ends like 1/n or 0.01")
        ->take_all();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lower confidence bounds for the proportion of false null hypotheses"};
    app.set_version_flag("--version", std::string(version));
    app.require_subcommand(1);

    RunConfig config;
    RawOptions raw;

    auto* estimate = app.add_subcommand("estimate", "Lower confidence bound from a file of p-values");
    estimate->add_option("-i,--input", raw.input, "p-value file (one per line, or CSV)")->required();
    estimate->add_option("--input-format", raw.input_format, "auto|text|csv")->capture_default_str();
    estimate->add_option("--column", config.column, "CSV column holding p-values")->capture_default_str();
    estimate->add_option("--refine-grid", config.refine_grid,
                         "Extra evaluation points per gap between candidate points");
    estimate->add_flag("--no-clamp{false}", config.clamp, "Report lambda_hat without clamping to [0,1]");
    estimate->add_option("--replicates", config.replicates,
                         "Monte Carlo replicates when --sequence monte_carlo");
    estimate->add_option("--cache", raw.cache, "Calibration cache file (JSON)");
    add_delta(estimate, raw);
    add_seed(estimate, raw);
    add_common(estimate, config, raw);

    auto* calibrate = app.add_subcommand("calibrate", "Monte Carlo bounding sequences over intervals");
    calibrate->add_option("-n,--n", config.n_values, "Sample size(s)")->delimiter(',');
    calibrate->add_option("--replicates", config.replicates, "Simulated samples per entry")
        ->capture_default_str();
    calibrate->add_option("--cache", raw.cache, "Calibration cache file (JSON)");
    add_delta(calibrate, raw);
    add_seed(calibrate, raw);
    add_common(calibrate, config, raw);

    auto* power = app.add_subcommand("simulate-power", "Power curves under the shift-location model");
    power->add_option("-n,--n", config.n_values, "Number of tests")->delimiter(',');
    power->add_option("--lambda", config.lambdas, "Proportion(s) of false nulls")->delimiter(',');
    power->add_option("--gamma", config.gammas, "Sparsity exponent(s): lambda = n^-gamma")->delimiter(',');
    power->add_option("--mu", config.mus, "Shift(s) of the alternative statistics")->delimiter(',');
    power->add_option("--r", config.rs, "Signal exponent(s): mu = (kappa r log n)^(1/kappa)")
        ->delimiter(',');
    power->add_option("--kappa", config.kappa, "Subbotin shape (2 = Gaussian)")->capture_default_str();
    power->add_option("--replicates", config.replicates, "Simulations per point")->capture_default_str();
    power->add_option("--calibration-replicates", config.calibration_replicates,
                      "Replicates for monte_carlo sequences")
        ->capture_default_str();
    power->add_option("--refine-grid", config.refine_grid, "Extra evaluation points per gap");
    power->add_option("--cache", raw.cache, "Calibration cache file (JSON)");
    add_delta(power, raw);
    add_seed(power, raw);
    add_common(power, config, raw);

    auto* regime = app.add_subcommand("simulate-regime", "Asymptotic detection regimes on a (gamma, r) grid");
    regime->add_option("--nu", raw.nus, "Regular-variation exponents, e.g. 0,1/2,1")->delimiter(',');
    regime->add_option("--grid", config.grid, "Grid points per axis")->capture_default_str();
    regime->add_option("--r-max", config.r_max, "Upper end of the r axis")->capture_default_str();
    add_common(regime, config, raw);

    auto* daniels = app.add_subcommand("check-daniels", "Monte Carlo check of P(sup U_n(t)/t >= lam) = 1/lam");
    daniels->add_option("-n,--n", config.n_values, "Sample size(s)")->delimiter(',');
    daniels->add_option("--lam", config.lams, "Threshold(s) > 1")->delimiter(',');
    daniels->add_option("--replicates", config.replicates, "Simulated samples")->capture_default_str();
    add_seed(daniels, raw);
    add_common(daniels, config, raw);

    std::string report_path;
    auto* replay = app.add_subcommand("replay", "Re-run the configuration embedded in a JSON report");
    replay->add_option("report", report_path, "Report written by an earlier run")->required();
    replay->add_option("-o,--output", raw.output, "Write the artifact here instead of stdout");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        // --help and --version arrive here as successful "errors".
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << nlohmann::json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump() << '\n';
        return exit_usage;
    }

    try
    {
        if (replay->parsed())
        {
            RunConfig replayed = config_from_report(report_path);
            replayed.output.reset();
            if (!raw.output.empty())
                replayed.output = raw.output;
            return run(replayed, std::cout, std::cerr);
        }

        CLI::App* chosen = app.get_subcommands().front();
        config.command = parse_command(chosen->get_name());
        if (!raw.input.empty())
            config.input = raw.input;
        config.input_format = parse_input_format(raw.input_format);
        if (!raw.deltas.empty())
        {
            config.deltas.clear();
            for (const auto& d : raw.deltas)
                config.deltas.push_back(parse_delta_kind(d));
        }
        if (!raw.sequence.empty())
            config.sequence = parse_sequence_method(raw.sequence);
        if (!raw.intervals.empty())
        {
            config.intervals.clear();
            for (const auto& spec : raw.intervals)
                config.intervals.push_back(IntervalSpec::parse(spec));
        }
        if (!raw.nus.empty())
        {
            config.nus.clear();
            for (const auto& nu : raw.nus)
                config.nus.push_back(parse_exponent(nu));
        }
        if (const CLI::Option* seed = chosen->get_option_no_throw("--seed"); seed && seed->count() > 0)
            config.seed = raw.seed;
        config.format = parse_output_format(raw.format);
        if (!raw.output.empty())
            config.output = raw.output;
        if (!raw.cache.empty())
            config.cache = raw.cache;
    }
    catch (const std::exception& e)
    {
        std::cerr << nlohmann::json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump() << '\n';
        return exit_usage;
    }

    return run(config, std::cout, std::cerr);
}
