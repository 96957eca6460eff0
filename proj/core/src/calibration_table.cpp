#include "nullprop/calibration_table.hpp"

#include "nullprop/random.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace nullprop
{

using json = nlohmann::json;

std::string key_decimal(double value)
{
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

CalibrationKey CalibrationKey::make(std::int64_t n, DeltaKind delta, Interval interval, double alpha)
{
    return {n, delta, key_decimal(interval.lo), key_decimal(interval.hi), key_decimal(alpha)};
}

CalibrationKey CalibrationKey::of(const CalibrationRequest& request)
{
    return make(request.n, request.delta, request.interval, request.alpha);
}

CalibrationEntry CalibrationEntry::from(const CalibrationRequest& request,
                                        const CalibrationResult& result)
{
    return {request.n,       request.delta,       request.interval,
            request.alpha,   result.replicates_used, request.seed,
            result.beta,     result.achieved_level};
}

CacheError::CacheError(const std::filesystem::path& path, const std::string& what)
    : std::runtime_error("calibration cache " + path.string() + ": " + what), path_(path)
{
}

std::optional<CalibrationEntry> CalibrationTable::get(const CalibrationKey& key) const
{
    const auto it = entries_.find(key);
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

bool CalibrationTable::put(const CalibrationEntry& entry)
{
    const CalibrationKey key = entry.key();
    const auto it = entries_.find(key);
    if (it == entries_.end())
    {
        entries_.emplace(key, entry);
        return true;
    }
    if (entry.replicates > it->second.replicates)
    {
        it->second = entry;
        return true;
    }
    return false;
}

std::string CalibrationTable::to_json() const
{
    json doc;
    doc["schema_version"] = schema_version;
    doc["generator"] = std::string(generator_tag);
    json items = json::array();
    for (const auto& [key, e] : entries_)
    {
        items.push_back({{"n", e.n},
                         {"delta_kind", std::string(to_string(e.delta))},
                         {"a", e.interval.lo},
                         {"b", e.interval.hi},
                         {"alpha", e.alpha},
                         {"replicates", e.replicates},
                         {"seed", e.seed},
                         {"beta", e.beta},
                         {"achieved_level", e.achieved_level}});
    }
    doc["entries"] = std::move(items);
    return doc.dump(2) + "\n";
}

CalibrationTable CalibrationTable::load(const std::filesystem::path& path)
{
    CalibrationTable table;
    std::error_code ec;
    if (!std::filesystem::exists(path, ec))
        return table;

    std::ifstream in(path);
    if (!in)
        throw CacheError(path, "cannot open for reading");

    json doc;
    try
    {
        doc = json::parse(in);
    }
    catch (const json::exception& e)
    {
        throw CacheError(path, std::string("not valid JSON (") + e.what() + "); refusing to load");
    }

    try
    {
        if (doc.at("schema_version").get<int>() != schema_version)
            throw CacheError(path, "unsupported schema_version");
        if (doc.at("generator").get<std::string>() != generator_tag)
        {
            throw CacheError(path, "generated with '" + doc.at("generator").get<std::string>() +
                                       "', this build uses '" + std::string(generator_tag) + "'");
        }
        for (const json& item : doc.at("entries"))
        {
            CalibrationEntry e;
            e.n = item.at("n").get<std::int64_t>();
            e.delta = parse_delta_kind(item.at("delta_kind").get<std::string>());
            e.interval = {item.at("a").get<double>(), item.at("b").get<double>()};
            e.alpha = item.at("alpha").get<double>();
            e.replicates = item.at("replicates").get<std::int64_t>();
            e.seed = item.at("seed").get<std::uint64_t>();
            e.beta = item.at("beta").get<double>();
            e.achieved_level = item.at("achieved_level").get<double>();
            e.interval.validate();
            if (e.n < 1 || e.replicates < 1 || !(e.alpha > 0.0 && e.alpha < 1.0) ||
                e.achieved_level > e.alpha)
            {
                throw std::invalid_argument("entry violates table invariants");
            }
            table.put(e);
        }
    }
    catch (const CacheError&)
    {
        throw;
    }
    catch (const std::exception& e)
    {
        throw CacheError(path, std::string("malformed document (") + e.what() + ")");
    }
    return table;
}

void CalibrationTable::save(const std::filesystem::path& path) const
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw CacheError(path, "cannot open temporary file for writing");
        out << to_json();
        out.flush();
        if (!out)
            throw CacheError(path, "write failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw CacheError(path, "atomic replace failed: " + ec.message());
}

CalibrationEntry calibrate_cached(CalibrationTable& table, const CalibrationRequest& request,
                                  unsigned workers)
{
    if (auto hit = table.get(CalibrationKey::of(request)); hit && hit->replicates >= request.replicates)
        return *hit;
    const CalibrationResult result = calibrate_beta(request, workers);
    const CalibrationEntry entry = CalibrationEntry::from(request, result);
    table.put(entry);
    return entry;
}

} // namespace nullprop
