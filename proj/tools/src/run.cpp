#include "nullprop/cli/run.hpp"

#include "nullprop/calibration.hpp"
#include "nullprop/calibration_table.hpp"
#include "nullprop/estimator.hpp"
#include "nullprop/random.hpp"
#include "nullprop/regime.hpp"
#include "nullprop/simlab.hpp"
#include "nullprop/version.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

namespace nullprop::cli
{

using json = nlohmann::json;

namespace
{

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

// JSON has no NaN; missing values are null.
json number_or_null(double value) { return std::isfinite(value) ? json(value) : json(nullptr); }

json envelope(const RunConfig& config)
{
    json doc;
    doc["nullprop_version"] = std::string(version);
    doc["generator"] = std::string(generator_tag);
    doc["command"] = std::string(to_string(config.command));
    doc["config"] = to_json(config);
    return doc;
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out)
{
    if (!config.output)
    {
        out << text;
        return;
    }
    std::ofstream file(*config.output, std::ios::trunc);
    if (!file)
        throw std::runtime_error("cannot open output file " + config.output->string());
    file << text;
    if (!file)
        throw std::runtime_error("write failed for " + config.output->string());
}

class CacheSession
{
public:
    explicit CacheSession(const RunConfig& config) : path_(config.cache)
    {
        if (path_)
            table_ = CalibrationTable::load(*path_);
    }

    CalibrationTable* table() { return path_ ? &table_ : nullptr; }

    void commit()
    {
        if (path_)
            table_.save(*path_);
    }

private:
    std::optional<std::filesystem::path> path_;
    CalibrationTable table_;
};

EstimateConfig make_estimate_config(const RunConfig& config, DeltaKind delta,
                                    const IntervalSpec& interval, std::int64_t n,
                                    std::int64_t mc_replicates)
{
    EstimateConfig ec;
    ec.delta = delta;
    ec.sequence.method = config.sequence_for(delta);
    ec.sequence.alpha = config.alpha;
    ec.sequence.replicates = mc_replicates;
    ec.sequence.seed = *config.seed;
    if (n >= 3 || !interval.is_truncated())
        ec.interval = interval.resolve(n);
    ec.refine_grid = config.refine_grid;
    ec.clamp = config.clamp;
    return ec;
}

// ---------------------------------------------------------------- estimate

std::string run_estimate(const RunConfig& config)
{
    if (!config.input)
        throw std::invalid_argument("estimate needs --input");
    ReadStats stats;
    const PValueSample sample =
        read_pvalues(*config.input, config.input_format, config.column, &stats);
    const auto n = static_cast<std::int64_t>(sample.size());

    CacheSession cache(config);
    json reports = json::array();
    std::ostringstream csv_text;
    CsvWriter csv(csv_text, {"source", "n", "delta_kind", "sequence", "alpha", "interval", "a", "b",
                             "refine_grid", "clamp", "beta_used", "lambda_hat_raw", "lambda_hat",
                             "argmax_t", "argmax_at_left_boundary", "empty_interval", "candidates",
                             "hc_reject", "fwer_lambda"});

    for (const DeltaKind delta : config.deltas)
    {
        for (const IntervalSpec& spec : config.intervals)
        {
            const EstimateConfig ec =
                make_estimate_config(config, delta, spec, n, config.replicates);
            const EstimateReport r = estimate_lambda(sample, ec, cache.table(), config.workers);

            json warnings = json::array();
            if (r.empty_interval)
                warnings.push_back("no p-value inside the interval; only its left end was evaluated");
            if (ec.sequence.method == SequenceMethod::gumbel && r.interval.lo == 0.0)
                warnings.push_back("Gumbel sequence on an interval starting at 0 is conservative "
                                   "only asymptotically; prefer the truncated interval");

            reports.push_back({{"source", sample.source()},
                               {"n", r.n},
                               {"values_read", stats.values},
                               {"lines_skipped", stats.skipped},
                               {"delta_kind", std::string(to_string(delta))},
                               {"sequence", std::string(to_string(ec.sequence.method))},
                               {"alpha", r.alpha},
                               {"interval", spec.text()},
                               {"a", r.interval.lo},
                               {"b", r.interval.hi},
                               {"refine_grid", ec.refine_grid},
                               {"clamp", ec.clamp},
                               {"beta_used", r.beta_used},
                               {"lambda_hat_raw", r.lambda_hat_raw},
                               {"lambda_hat", r.lambda_hat},
                               {"argmax_t", r.argmax_t},
                               {"argmax_at_left_boundary", r.argmax_at_left_boundary},
                               {"empty_interval", r.empty_interval},
                               {"candidates", r.candidates},
                               {"hc_reject", r.hc_reject},
                               {"fwer_lambda", r.fwer_lambda},
                               {"warnings", warnings}});
            csv.cell(std::string_view(sample.source()))
                .cell(r.n)
                .cell(to_string(delta))
                .cell(to_string(ec.sequence.method))
                .cell(r.alpha)
                .cell(std::string_view(spec.text()))
                .cell(r.interval.lo)
                .cell(r.interval.hi)
                .cell(ec.refine_grid)
                .cell(ec.clamp)
                .cell(r.beta_used)
                .cell(r.lambda_hat_raw)
                .cell(r.lambda_hat)
                .cell(r.argmax_t)
                .cell(r.argmax_at_left_boundary)
                .cell(r.empty_interval)
                .cell(r.candidates)
                .cell(r.hc_reject)
                .cell(r.fwer_lambda);
            csv.end_row();
        }
    }
    cache.commit();

    if (config.format == OutputFormat::csv)
        return csv_text.str();
    json doc = envelope(config);
    doc["reports"] = std::move(reports);
    return doc.dump(2) + "\n";
}

// --------------------------------------------------------------- calibrate

std::string run_calibrate(const RunConfig& config)
{
    CacheSession cache(config);
    json rows = json::array();
    std::ostringstream csv_text;
    CsvWriter csv(csv_text, {"n", "delta_kind", "interval", "a", "b", "alpha", "replicates", "seed",
                             "beta_mc", "achieved_level", "mc_standard_error", "beta_analytic",
                             "analytic_method", "from_cache"});

    for (const std::int64_t n : config.n_values)
    {
        for (const IntervalSpec& spec : config.intervals)
        {
            for (const DeltaKind delta : config.deltas)
            {
                CalibrationRequest request;
                request.n = n;
                request.delta = delta;
                request.interval = spec.resolve(n);
                request.alpha = config.alpha;
                request.replicates = config.replicates;
                request.seed = *config.seed;
                request.validate();

                CalibrationEntry entry;
                double standard_error = nan;
                bool from_cache = false;
                const auto hit =
                    cache.table() ? cache.table()->get(CalibrationKey::of(request)) : std::nullopt;
                if (hit && hit->replicates >= request.replicates)
                {
                    entry = *hit;
                    from_cache = true;
                }
                else
                {
                    const CalibrationResult result = calibrate_beta(request, config.workers);
                    entry = CalibrationEntry::from(request, result);
                    standard_error = result.mc_standard_error;
                    if (cache.table())
                        cache.table()->put(entry);
                }

                const SequenceMethod partner = BoundingFunction(delta).analytic_method();
                double analytic = nan;
                if (partner != SequenceMethod::gumbel || n >= 16)
                    analytic = analytic_beta(partner, n, config.alpha);

                rows.push_back({{"n", n},
                                {"delta_kind", std::string(to_string(delta))},
                                {"interval", spec.text()},
                                {"a", entry.interval.lo},
                                {"b", entry.interval.hi},
                                {"alpha", entry.alpha},
                                {"replicates", entry.replicates},
                                {"seed", entry.seed},
                                {"beta_mc", entry.beta},
                                {"achieved_level", entry.achieved_level},
                                {"mc_standard_error", number_or_null(standard_error)},
                                {"beta_analytic", number_or_null(analytic)},
                                {"analytic_method", std::string(to_string(partner))},
                                {"from_cache", from_cache}});
                csv.cell(n)
                    .cell(to_string(delta))
                    .cell(std::string_view(spec.text()))
                    .cell(entry.interval.lo)
                    .cell(entry.interval.hi)
                    .cell(entry.alpha)
                    .cell(entry.replicates)
                    .cell(entry.seed)
                    .cell(entry.beta)
                    .cell(entry.achieved_level)
                    .cell(standard_error)
                    .cell(analytic)
                    .cell(to_string(partner))
                    .cell(from_cache);
                csv.end_row();
            }
        }
    }
    cache.commit();

    if (config.format == OutputFormat::csv)
        return csv_text.str();
    json doc = envelope(config);
    doc["calibrations"] = std::move(rows);
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------- simulate-power

std::string run_simulate_power(const RunConfig& config)
{
    if (config.lambdas.empty() == config.gammas.empty())
        throw std::invalid_argument("simulate-power needs exactly one of --lambda or --gamma");
    if (config.mus.empty() == config.rs.empty())
        throw std::invalid_argument("simulate-power needs exactly one of --mu or --r");

    CacheSession cache(config);
    json rows = json::array();
    std::ostringstream csv_text;
    CsvWriter csv(csv_text, {"mu", "lambda_true", "delta_kind", "mean_ratio", "median_ratio", "p10",
                             "p90", "n", "kappa", "r", "gamma", "sequence", "alpha", "beta",
                             "replicates", "seed", "fraction_zero"});

    const bool by_gamma = !config.gammas.empty();
    const bool by_r = !config.rs.empty();
    const std::vector<double>& sparsity = by_gamma ? config.gammas : config.lambdas;
    const std::vector<double>& shifts = by_r ? config.rs : config.mus;

    for (const std::int64_t n : config.n_values)
    {
        std::vector<EstimateConfig> configs;
        for (const DeltaKind delta : config.deltas)
        {
            configs.push_back(make_estimate_config(config, delta, config.intervals.front(), n,
                                                   config.calibration_replicates));
        }
        for (const double s : sparsity)
        {
            for (const double shift : shifts)
            {
                ShiftModel model;
                model.kappa = config.kappa;
                model.n = n;
                model.lambda_true = by_gamma ? std::pow(static_cast<double>(n), -s) : s;
                model.seed = *config.seed;
                if (by_r)
                    model.r = shift;
                else
                    model.mu_override = shift;

                const PowerCurveResult result = power_curve(std::span(&model, 1), configs,
                                                            config.replicates, cache.table(),
                                                            config.workers);
                for (const PowerCurveRow& row : result.rows)
                {
                    const double r = by_r ? shift : nan;
                    const double gamma = by_gamma ? s : nan;
                    rows.push_back({{"mu", row.model.mu()},
                                    {"lambda_true", row.model.lambda_true},
                                    {"lambda_realized", row.model.realized_lambda()},
                                    {"delta_kind", std::string(to_string(row.config.delta))},
                                    {"mean_ratio", row.ratio.mean},
                                    {"median_ratio", row.ratio.median},
                                    {"p10", row.ratio.p10},
                                    {"p90", row.ratio.p90},
                                    {"n", n},
                                    {"kappa", row.model.kappa},
                                    {"r", number_or_null(r)},
                                    {"gamma", number_or_null(gamma)},
                                    {"sequence", std::string(to_string(row.config.sequence.method))},
                                    {"alpha", config.alpha},
                                    {"beta", row.beta},
                                    {"replicates", row.replicates},
                                    {"seed", row.model.seed},
                                    {"fraction_zero", row.fraction_zero}});
                    csv.cell(row.model.mu())
                        .cell(row.model.lambda_true)
                        .cell(to_string(row.config.delta))
                        .cell(row.ratio.mean)
                        .cell(row.ratio.median)
                        .cell(row.ratio.p10)
                        .cell(row.ratio.p90)
                        .cell(n)
                        .cell(row.model.kappa)
                        .cell(r)
                        .cell(gamma)
                        .cell(to_string(row.config.sequence.method))
                        .cell(config.alpha)
                        .cell(row.beta)
                        .cell(row.replicates)
                        .cell(row.model.seed)
                        .cell(row.fraction_zero);
                    csv.end_row();
                }
            }
        }
    }
    cache.commit();

    if (config.format == OutputFormat::csv)
        return csv_text.str();
    json doc = envelope(config);
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

// --------------------------------------------------------- simulate-regime

std::string run_simulate_regime(const RunConfig& config)
{
    const std::vector<RegimeCell> cells = regime_grid(config.nus, config.grid, config.r_max);
    if (config.format == OutputFormat::csv)
    {
        std::ostringstream text;
        CsvWriter csv(text, {"nu", "gamma", "r", "regime", "fwer_regime"});
        for (const RegimeCell& cell : cells)
        {
            csv.cell(cell.nu.value())
                .cell(cell.gamma)
                .cell(cell.r)
                .cell(to_string(cell.regime))
                .cell(to_string(cell.fwer));
            csv.end_row();
        }
        return text.str();
    }
    json rows = json::array();
    for (const RegimeCell& cell : cells)
    {
        rows.push_back({{"nu", cell.nu.value()},
                        {"gamma", cell.gamma},
                        {"r", cell.r},
                        {"regime", std::string(to_string(cell.regime))},
                        {"fwer_regime", std::string(to_string(cell.fwer))}});
    }
    json doc = envelope(config);
    doc["cells"] = std::move(rows);
    return doc.dump(2) + "\n";
}

// ----------------------------------------------------------- check-daniels

std::string run_check_daniels(const RunConfig& config)
{
    json rows = json::array();
    std::ostringstream csv_text;
    CsvWriter csv(csv_text, {"n", "lam", "replicates", "seed", "probability", "expected",
                             "standard_error"});
    for (const std::int64_t n : config.n_values)
    {
        for (const double lam : config.lams)
        {
            const DanielsResult d = daniels_check(n, lam, config.replicates, *config.seed, config.workers);
            rows.push_back({{"n", d.n},
                            {"lam", d.lam},
                            {"replicates", d.replicates},
                            {"seed", *config.seed},
                            {"probability", d.probability},
                            {"expected", d.expected},
                            {"standard_error", d.standard_error}});
            csv.cell(d.n)
                .cell(d.lam)
                .cell(d.replicates)
                .cell(*config.seed)
                .cell(d.probability)
                .cell(d.expected)
                .cell(d.standard_error);
            csv.end_row();
        }
    }
    if (config.format == OutputFormat::csv)
        return csv_text.str();
    json doc = envelope(config);
    doc["results"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string_view error_kind(const std::exception& e)
{
    if (dynamic_cast<const InputError*>(&e))
        return "input_error";
    if (dynamic_cast<const CacheError*>(&e))
        return "cache_error";
    if (dynamic_cast<const std::invalid_argument*>(&e))
        return "invalid_argument";
    if (dynamic_cast<const std::domain_error*>(&e))
        return "domain_error";
    return "runtime_error";
}

} // namespace

int run(const RunConfig& original, std::ostream& out, std::ostream& err)
{
    RunConfig config = original;
    try
    {
        if (!(config.alpha > 0.0 && config.alpha < 1.0))
            throw std::invalid_argument("alpha must lie in (0,1)");
        if (config.deltas.empty() || config.intervals.empty())
            throw std::invalid_argument("at least one bounding function and one interval are required");
        // No hidden entropy: a missing seed is drawn once and recorded in the output.
        if (!config.seed)
        {
            std::random_device device;
            config.seed = (static_cast<std::uint64_t>(device()) << 32) | device();
        }

        std::string text;
        switch (config.command)
        {
        case Command::estimate:
            text = run_estimate(config);
            break;
        case Command::calibrate:
            text = run_calibrate(config);
            break;
        case Command::simulate_power:
            text = run_simulate_power(config);
            break;
        case Command::simulate_regime:
            text = run_simulate_regime(config);
            break;
        case Command::check_daniels:
            text = run_check_daniels(config);
            break;
        }
        emit(config, text, out);
        return exit_ok;
    }
    catch (const std::exception& e)
    {
        const json error = {{"error",
                             {{"command", std::string(to_string(config.command))},
                              {"kind", std::string(error_kind(e))},
                              {"message", e.what()}}}};
        err << error.dump() << '\n';
        return exit_failure;
    }
}

RunConfig config_from_report(const std::filesystem::path& report)
{
    std::ifstream in(report);
    if (!in)
        throw std::runtime_error("cannot open report " + report.string());
    const json doc = json::parse(in);
    return config_from_json(doc.at("config"));
}

} // namespace nullprop::cli
