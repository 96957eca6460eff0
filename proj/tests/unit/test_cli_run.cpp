#include "nullprop/calibration_table.hpp"
#include "nullprop/cli/run.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <sys/wait.h>

using namespace nullprop;
using namespace nullprop::cli;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace
{

fs::path scratch_dir()
{
    const fs::path dir = fs::path(NULLPROP_TEST_TMP) / "cli_run";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path)
{
    std::ifstream in(path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome execute(const RunConfig& config)
{
    std::ostringstream out, err;
    const int code = run(config, out, err);
    return {code, out.str(), err.str()};
}

json golden_schema() { return json::parse(slurp(fs::path(NULLPROP_GOLDEN_DIR) / "schema.json")); }

std::vector<std::string> keys(const json& object)
{
    std::vector<std::string> out;
    for (const auto& item : object.items())
        out.push_back(item.key());
    return out;
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

fs::path pvalue_file()
{
    const fs::path path = scratch_dir() / "pvalues.txt";
    std::ofstream out(path);
    out << "# twenty p-values\n";
    for (int i = 0; i < 16; ++i)
        out << (i + 0.5) / 16.0 << '\n';
    out << "1e-9\n2e-9\n3e-9\n4e-9\n";
    return path;
}

RunConfig estimate_config()
{
    RunConfig c;
    c.command = Command::estimate;
    c.input = pvalue_file();
    c.seed = 5;
    return c;
}

int shell(const std::string& command) { return WEXITSTATUS(std::system(command.c_str())); }

} // namespace

TEST_CASE("estimate output matches the golden schema")
{
    const json schema = golden_schema().at("estimate");
    RunConfig c = estimate_config();
    Outcome o = execute(c);
    REQUIRE(o.code == exit_ok);
    const json doc = json::parse(o.out);
    CHECK(keys(doc) == schema.at("json_keys").get<std::vector<std::string>>());
    CHECK(keys(doc.at("reports").at(0)) == schema.at("row_keys").get<std::vector<std::string>>());
    CHECK(doc.at("generator") == "mt19937_64+splitmix64-substreams/v1");
    CHECK(doc.at("config").at("seed") == 5);
    CHECK(doc.at("reports").at(0).at("n") == 20);
    CHECK(doc.at("reports").at(0).at("lambda_hat").get<double>() > 0.0);

    c.format = OutputFormat::csv;
    o = execute(c);
    CHECK(first_line(o.out) == schema.at("csv_header").get<std::string>());
}

TEST_CASE("every command matches its golden schema")
{
    const json schema = golden_schema();
    RunConfig cal;
    cal.command = Command::calibrate;
    cal.n_values = {200};
    cal.replicates = 200;
    cal.seed = 1;

    RunConfig power;
    power.command = Command::simulate_power;
    power.n_values = {200};
    power.lambdas = {0.05};
    power.mus = {1.0, 3.0};
    power.deltas = {DeltaKind::stddev, DeltaKind::linear};
    power.replicates = 5;
    power.seed = 2;

    RunConfig regime;
    regime.command = Command::simulate_regime;
    regime.grid = 3;

    RunConfig daniels;
    daniels.command = Command::check_daniels;
    daniels.n_values = {100};
    daniels.replicates = 200;
    daniels.seed = 3;

    struct Case
    {
        std::string name;
        std::string rows;
        RunConfig config;
    };
    const std::vector<Case> cases{{"calibrate", "calibrations", cal},
                                  {"simulate-power", "rows", power},
                                  {"simulate-regime", "cells", regime},
                                  {"check-daniels", "results", daniels}};
    for (auto [name, rows, config] : cases)
    {
        INFO(name);
        const json& expected = schema.at(name);
        Outcome o = execute(config);
        REQUIRE(o.code == exit_ok);
        const json doc = json::parse(o.out);
        CHECK(keys(doc) == expected.at("json_keys").get<std::vector<std::string>>());
        CHECK(keys(doc.at(rows).at(0)) == expected.at("row_keys").get<std::vector<std::string>>());
        config.format = OutputFormat::csv;
        o = execute(config);
        REQUIRE(o.code == exit_ok);
        CHECK(first_line(o.out) == expected.at("csv_header").get<std::string>());
    }
}

TEST_CASE("power CSV leads with the plotting columns")
{
    RunConfig c;
    c.command = Command::simulate_power;
    c.n_values = {100};
    c.lambdas = {0.1};
    c.mus = {2.0};
    c.replicates = 3;
    c.seed = 1;
    c.format = OutputFormat::csv;
    const Outcome o = execute(c);
    CHECK(first_line(o.out).rfind("mu,lambda_true,delta_kind,mean_ratio,median_ratio,p10,p90", 0) == 0);
}

TEST_CASE("regime grid CSV matches the golden file")
{
    RunConfig c;
    c.command = Command::simulate_regime;
    c.grid = 3;
    c.r_max = 2.0;
    c.format = OutputFormat::csv;
    const Outcome o = execute(c);
    REQUIRE(o.code == exit_ok);
    CHECK(o.out == slurp(fs::path(NULLPROP_GOLDEN_DIR) / "regime_grid3.csv"));
}

TEST_CASE("calibrate adds one cache entry and then reuses it")
{
    const fs::path cache = scratch_dir() / "cache.json";
    fs::remove(cache);
    RunConfig c;
    c.command = Command::calibrate;
    c.n_values = {200};
    c.replicates = 1000;
    c.seed = 7;
    c.cache = cache;
    c.format = OutputFormat::csv;
    Outcome o = execute(c);
    REQUIRE(o.code == exit_ok);
    CHECK(CalibrationTable::load(cache).size() == 1);
    CHECK(o.out.find(",false\n") != std::string::npos);
    CHECK(o.out.find("\"1/n,1-1/n\"") != std::string::npos);

    o = execute(c);
    CHECK(CalibrationTable::load(cache).size() == 1);
    CHECK(o.out.find(",true\n") != std::string::npos);
}

TEST_CASE("a report replays to identical numbers")
{
    const fs::path report = scratch_dir() / "report.json";
    RunConfig c = estimate_config();
    c.sequence = SequenceMethod::monte_carlo;
    c.replicates = 300;
    c.intervals = {IntervalSpec::parse("trunc"), IntervalSpec::parse("0.01,0.5")};
    c.deltas = {DeltaKind::stddev, DeltaKind::constant};
    c.refine_grid = 2;
    c.output = report;
    REQUIRE(execute(c).code == exit_ok);

    RunConfig replayed = config_from_report(report);
    replayed.output.reset();
    const Outcome again = execute(replayed);
    REQUIRE(again.code == exit_ok);
    CHECK(json::parse(again.out).at("reports") == json::parse(slurp(report)).at("reports"));
    json expected = to_json(c);
    expected["output"] = nullptr;
    CHECK(to_json(replayed) == expected);
}

TEST_CASE("simulation reports replay too")
{
    RunConfig power;
    power.command = Command::simulate_power;
    power.n_values = {300};
    power.gammas = {0.4};
    power.rs = {0.5};
    power.replicates = 10;
    power.seed = 44;
    const Outcome first = execute(power);
    REQUIRE(first.code == exit_ok);
    const RunConfig replayed = config_from_json(json::parse(first.out).at("config"));
    CHECK(execute(replayed).out == first.out);
}

TEST_CASE("a missing seed is drawn and recorded")
{
    RunConfig c;
    c.command = Command::check_daniels;
    c.n_values = {50};
    c.replicates = 100;
    const Outcome first = execute(c);
    REQUIRE(first.code == exit_ok);
    const json doc = json::parse(first.out);
    REQUIRE(doc.at("config").at("seed").is_number_unsigned());
    const RunConfig replayed = config_from_json(doc.at("config"));
    CHECK(execute(replayed).out == first.out);
}

TEST_CASE("the worker count does not change results")
{
    RunConfig c;
    c.command = Command::calibrate;
    c.n_values = {150};
    c.replicates = 400;
    c.seed = 9;
    c.workers = 1;
    const json one = json::parse(execute(c).out).at("calibrations");
    c.workers = 4;
    const json four = json::parse(execute(c).out).at("calibrations");
    CHECK(one == four);
}

TEST_CASE("failures are reported as JSON with a nonzero exit")
{
    RunConfig c = estimate_config();
    c.alpha = 1.5;
    Outcome o = execute(c);
    CHECK(o.code == exit_failure);
    CHECK(o.out.empty());
    CHECK(json::parse(o.err).at("error").at("kind") == "invalid_argument");

    const fs::path bad = scratch_dir() / "bad.txt";
    std::ofstream(bad) << "0.1\n1.2\n";
    c = estimate_config();
    c.input = bad;
    o = execute(c);
    CHECK(o.code == exit_failure);
    const json error = json::parse(o.err).at("error");
    CHECK(error.at("kind") == "input_error");
    CHECK(error.at("command") == "estimate");
    CHECK(error.at("message").get<std::string>().find(":2:") != std::string::npos);

    const fs::path cache = scratch_dir() / "corrupt_cache.json";
    std::ofstream(cache) << "{ broken";
    c = estimate_config();
    c.sequence = SequenceMethod::monte_carlo;
    c.cache = cache;
    o = execute(c);
    CHECK(o.code == exit_failure);
    CHECK(json::parse(o.err).at("error").at("kind") == "cache_error");
}

TEST_CASE("interval specs")
{
    CHECK(IntervalSpec::parse("trunc").resolve(200).lo == 0.005);
    CHECK(IntervalSpec::parse("unit").resolve(200).hi == 1.0);
    const Interval iv = IntervalSpec::parse("1/n,0.01").resolve(200);
    CHECK(iv.lo == 0.005);
    CHECK(iv.hi == 0.01);
    CHECK(IntervalSpec::parse("0,1").text() == "0,1");
    CHECK_THROWS(IntervalSpec::parse("0.5"));
    CHECK_THROWS(IntervalSpec::parse("a,b"));
    CHECK_THROWS(IntervalSpec::parse("0.6,0.2").resolve(10));
    CHECK(parse_exponent("1/2") == Exponent{1, 2});
    CHECK(parse_exponent("0.5") == Exponent{1, 2});
    CHECK(to_string(Exponent{1, 1}) == "1");
}

TEST_CASE("the executable")
{
    const std::string exe = NULLPROP_CLI_EXE;
    const fs::path dir = scratch_dir();
    const std::string err = (dir / "stderr.txt").string();
    CHECK(shell(exe + " --version > /dev/null") == 0);
    CHECK(shell(exe + " estimate 2> " + err) == exit_usage);
    CHECK(json::parse(slurp(err)).at("error").at("kind") == "usage");
    CHECK(shell(exe + " estimate -i " + pvalue_file().string() + " --alpha 2 2> " + err + " > /dev/null") ==
          exit_failure);

    const fs::path report = dir / "exe_report.json";
    const fs::path replay = dir / "exe_replay.json";
    REQUIRE(shell(exe + " check-daniels -n 40 --lam 3,5 --replicates 300 --seed 8 -o " + report.string()) == 0);
    REQUIRE(shell(exe + " replay " + report.string() + " -o " + replay.string()) == 0);
    CHECK(json::parse(slurp(report)).at("results") == json::parse(slurp(replay)).at("results"));
    CHECK(json::parse(slurp(report)).at("results").size() == 2);
}
