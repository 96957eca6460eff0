#include "nullprop/cli/config.hpp"

#include <charconv>
#include <stdexcept>

namespace nullprop::cli
{

using json = nlohmann::json;

namespace
{

double parse_double(std::string_view text, std::string_view what)
{
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

bool valid_end(std::string_view text)
{
    if (text == "1/n" || text == "1-1/n")
        return true;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    return !text.empty() && ec == std::errc() && ptr == text.data() + text.size();
}

double resolve_end(const std::string& text, std::int64_t n)
{
    if (text == "1/n")
        return 1.0 / static_cast<double>(n);
    if (text == "1-1/n")
        return 1.0 - 1.0 / static_cast<double>(n);
    return parse_double(text, "interval end");
}

template <typename T>
std::optional<T> optional_field(const json& doc, const char* key)
{
    if (!doc.contains(key) || doc.at(key).is_null())
        return std::nullopt;
    return doc.at(key).get<T>();
}

} // namespace

std::string_view to_string(Command command)
{
    switch (command)
    {
    case Command::estimate:
        return "estimate";
    case Command::calibrate:
        return "calibrate";
    case Command::simulate_power:
        return "simulate-power";
    case Command::simulate_regime:
        return "simulate-regime";
    case Command::check_daniels:
        return "check-daniels";
    }
    return "unknown";
}

Command parse_command(std::string_view text)
{
    for (Command c : {Command::estimate, Command::calibrate, Command::simulate_power,
                      Command::simulate_regime, Command::check_daniels})
    {
        if (to_string(c) == text)
            return c;
    }
    throw std::invalid_argument("unknown command '" + std::string(text) + "'");
}

std::string_view to_string(OutputFormat format)
{
    return format == OutputFormat::json ? "json" : "csv";
}

OutputFormat parse_output_format(std::string_view text)
{
    if (text == "json")
        return OutputFormat::json;
    if (text == "csv")
        return OutputFormat::csv;
    throw std::invalid_argument("unknown output format '" + std::string(text) + "' (json|csv)");
}

IntervalSpec IntervalSpec::parse(std::string_view text)
{
    if (text == "trunc" || text == "truncated")
        return {"1/n", "1-1/n"};
    if (text == "unit" || text == "full")
        return {"0", "1"};
    const auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw std::invalid_argument("interval must be 'trunc', 'unit' or 'lo,hi', got '" +
                                    std::string(text) + "'");
    IntervalSpec spec{std::string(text.substr(0, comma)), std::string(text.substr(comma + 1))};
    if (!valid_end(spec.lo) || !valid_end(spec.hi))
        throw std::invalid_argument("interval ends must be numbers, '1/n' or '1-1/n': '" +
                                    std::string(text) + "'");
    return spec;
}

Interval IntervalSpec::resolve(std::int64_t n) const
{
    const Interval interval{resolve_end(lo, n), resolve_end(hi, n)};
    interval.validate();
    return interval;
}

SequenceMethod RunConfig::sequence_for(DeltaKind delta) const
{
    return sequence ? *sequence : BoundingFunction(delta).analytic_method();
}

Exponent parse_exponent(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash != std::string_view::npos)
    {
        const auto num = parse_double(text.substr(0, slash), "nu numerator");
        const auto den = parse_double(text.substr(slash + 1), "nu denominator");
        return {static_cast<int>(num), static_cast<int>(den)};
    }
    const double value = parse_double(text, "nu");
    if (value == 0.0)
        return {0, 1};
    if (value == 0.5)
        return {1, 2};
    if (value == 1.0)
        return {1, 1};
    // Decimal input: express over 1000.
    return {static_cast<int>(value * 1000.0 + 0.5), 1000};
}

std::string to_string(Exponent nu)
{
    if (nu.den == 1)
        return std::to_string(nu.num);
    return std::to_string(nu.num) + "/" + std::to_string(nu.den);
}

json to_json(const RunConfig& c)
{
    json doc;
    doc["command"] = std::string(to_string(c.command));
    doc["input"] = c.input ? json(c.input->string()) : json(nullptr);
    doc["input_format"] = std::string(to_string(c.input_format));
    doc["column"] = c.column;
    doc["refine_grid"] = c.refine_grid;
    doc["clamp"] = c.clamp;
    doc["alpha"] = c.alpha;
    json deltas = json::array();
    for (DeltaKind d : c.deltas)
        deltas.push_back(std::string(to_string(d)));
    doc["deltas"] = deltas;
    doc["sequence"] = c.sequence ? json(std::string(to_string(*c.sequence))) : json(nullptr);
    json intervals = json::array();
    for (const IntervalSpec& spec : c.intervals)
        intervals.push_back(spec.text());
    doc["intervals"] = intervals;
    doc["replicates"] = c.replicates;
    doc["seed"] = c.seed ? json(*c.seed) : json(nullptr);
    doc["n"] = c.n_values;
    doc["kappa"] = c.kappa;
    doc["lambda"] = c.lambdas;
    doc["gamma"] = c.gammas;
    doc["mu"] = c.mus;
    doc["r"] = c.rs;
    doc["calibration_replicates"] = c.calibration_replicates;
    json nus = json::array();
    for (Exponent nu : c.nus)
        nus.push_back(to_string(nu));
    doc["nu"] = nus;
    doc["grid"] = c.grid;
    doc["r_max"] = c.r_max;
    doc["lam"] = c.lams;
    doc["cache"] = c.cache ? json(c.cache->string()) : json(nullptr);
    doc["output"] = c.output ? json(c.output->string()) : json(nullptr);
    doc["format"] = std::string(to_string(c.format));
    doc["workers"] = c.workers;
    return doc;
}

RunConfig config_from_json(const json& doc)
{
    RunConfig c;
    c.command = parse_command(doc.at("command").get<std::string>());
    if (auto input = optional_field<std::string>(doc, "input"))
        c.input = *input;
    c.input_format = parse_input_format(doc.value("input_format", std::string("auto")));
    c.column = doc.value("column", c.column);
    c.refine_grid = doc.value("refine_grid", c.refine_grid);
    c.clamp = doc.value("clamp", c.clamp);
    c.alpha = doc.value("alpha", c.alpha);
    if (doc.contains("deltas"))
    {
        c.deltas.clear();
        for (const auto& d : doc.at("deltas"))
            c.deltas.push_back(parse_delta_kind(d.get<std::string>()));
    }
    if (auto seq = optional_field<std::string>(doc, "sequence"))
        c.sequence = parse_sequence_method(*seq);
    if (doc.contains("intervals"))
    {
        c.intervals.clear();
        for (const auto& spec : doc.at("intervals"))
            c.intervals.push_back(IntervalSpec::parse(spec.get<std::string>()));
    }
    c.replicates = doc.value("replicates", c.replicates);
    c.seed = optional_field<std::uint64_t>(doc, "seed");
    if (doc.contains("n"))
        c.n_values = doc.at("n").get<std::vector<std::int64_t>>();
    c.kappa = doc.value("kappa", c.kappa);
    if (doc.contains("lambda"))
        c.lambdas = doc.at("lambda").get<std::vector<double>>();
    if (doc.contains("gamma"))
        c.gammas = doc.at("gamma").get<std::vector<double>>();
    if (doc.contains("mu"))
        c.mus = doc.at("mu").get<std::vector<double>>();
    if (doc.contains("r"))
        c.rs = doc.at("r").get<std::vector<double>>();
    c.calibration_replicates = doc.value("calibration_replicates", c.calibration_replicates);
    if (doc.contains("nu"))
    {
        c.nus.clear();
        for (const auto& nu : doc.at("nu"))
            c.nus.push_back(parse_exponent(nu.get<std::string>()));
    }
    c.grid = doc.value("grid", c.grid);
    c.r_max = doc.value("r_max", c.r_max);
    if (doc.contains("lam"))
        c.lams = doc.at("lam").get<std::vector<double>>();
    if (auto cache = optional_field<std::string>(doc, "cache"))
        c.cache = *cache;
    if (auto output = optional_field<std::string>(doc, "output"))
        c.output = *output;
    c.format = parse_output_format(doc.value("format", std::string("json")));
    c.workers = doc.value("workers", c.workers);
    return c;
}

} // namespace nullprop::cli
