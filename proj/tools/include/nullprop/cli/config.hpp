#ifndef NULLPROP_CLI_CONFIG_HPP
#define NULLPROP_CLI_CONFIG_HPP

#include "nullprop/bounding.hpp"
#include "nullprop/cli/io.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nullprop::cli
{

enum class Command
{
    estimate,
    calibrate,
    simulate_power,
    simulate_regime,
    check_daniels
};

enum class OutputFormat
{
    json,
    csv
};

std::string_view to_string(Command command);
Command parse_command(std::string_view text);
std::string_view to_string(OutputFormat format);
OutputFormat parse_output_format(std::string_view text);

/// Interval whose ends may depend on n: each end is a number, "1/n" or "1-1/n".
/// The shorthands "trunc" and "unit" stand for "1/n,1-1/n" and "0,1".
struct IntervalSpec
{
    std::string lo = "1/n";
    std::string hi = "1-1/n";

    static IntervalSpec parse(std::string_view text);
    std::string text() const { return lo + "," + hi; }
    Interval resolve(std::int64_t n) const;
    bool is_truncated() const { return lo == "1/n" && hi == "1-1/n"; }
};

/// Everything a run needs. Serialized verbatim into every report so a run
/// can be replayed from its output.
struct RunConfig
{
    Command command = Command::estimate;

    // estimate
    std::optional<std::filesystem::path> input;
    InputFormat input_format = InputFormat::automatic;
    std::string column = "pvalue";
    std::int64_t refine_grid = 0;
    bool clamp = true;

    // shared statistical settings
    double alpha = 0.05;
    std::vector<DeltaKind> deltas{DeltaKind::stddev};
    /// Unset: each bounding function's analytic partner.
    std::optional<SequenceMethod> sequence;
    std::vector<IntervalSpec> intervals{IntervalSpec{}};
    std::int64_t replicates = 1000;
    std::optional<std::uint64_t> seed;

    // calibrate / simulate-power / check-daniels
    std::vector<std::int64_t> n_values{1000};

    // simulate-power
    double kappa = 2.0;
    std::vector<double> lambdas;  // fixed proportions
    std::vector<double> gammas;   // or lambda = n^-gamma
    std::vector<double> mus;      // fixed shifts
    std::vector<double> rs;       // or mu = (kappa r log n)^(1/kappa)
    std::int64_t calibration_replicates = 2000; // for monte_carlo betas inside simulations

    // simulate-regime
    std::vector<Exponent> nus{{0, 1}, {1, 2}, {1, 1}};
    int grid = 100;
    double r_max = 1.0;

    // check-daniels
    std::vector<double> lams{20.0};

    std::optional<std::filesystem::path> cache;
    std::optional<std::filesystem::path> output;
    OutputFormat format = OutputFormat::json;
    unsigned workers = 0; // 0 = hardware concurrency; never changes results

    SequenceMethod sequence_for(DeltaKind delta) const;
};

nlohmann::json to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& doc);

Exponent parse_exponent(std::string_view text);
std::string to_string(Exponent nu);

} // namespace nullprop::cli

#endif // NULLPROP_CLI_CONFIG_HPP
