#ifndef NULLPROP_CALIBRATION_TABLE_HPP
#define NULLPROP_CALIBRATION_TABLE_HPP

#include "nullprop/bounding.hpp"
#include "nullprop/calibration.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

namespace nullprop
{

/// Exact-match lookup key. Interval ends and alpha are compared after
/// rounding to 12 significant decimal digits, so values that went through a
/// text round-trip still match.
struct CalibrationKey
{
    std::int64_t n = 0;
    DeltaKind delta = DeltaKind::stddev;
    std::string a;
    std::string b;
    std::string alpha;

    static CalibrationKey make(std::int64_t n, DeltaKind delta, Interval interval, double alpha);
    static CalibrationKey of(const CalibrationRequest& request);

    friend auto operator<=>(const CalibrationKey&, const CalibrationKey&) = default;
};

/// 12-significant-digit decimal form used for keys.
std::string key_decimal(double value);

struct CalibrationEntry
{
    std::int64_t n = 0;
    DeltaKind delta = DeltaKind::stddev;
    Interval interval;
    double alpha = 0.05;
    std::int64_t replicates = 0;
    std::uint64_t seed = 0;
    double beta = 0.0;
    double achieved_level = 0.0;

    static CalibrationEntry from(const CalibrationRequest& request, const CalibrationResult& result);
    CalibrationKey key() const { return CalibrationKey::make(n, delta, interval, alpha); }
};

class CacheError : public std::runtime_error
{
public:
    CacheError(const std::filesystem::path& path, const std::string& what);
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

/// Persistent store of calibrated bounding sequences.
class CalibrationTable
{
public:
    static constexpr int schema_version = 1;

    std::optional<CalibrationEntry> get(const CalibrationKey& key) const;

    /// Inserts, or replaces an existing entry only when the new one used
    /// strictly more replicates. Returns true if the table changed.
    bool put(const CalibrationEntry& entry);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::map<CalibrationKey, CalibrationEntry>& entries() const { return entries_; }

    /// Missing file -> empty table. Unparseable JSON, wrong schema version, a
    /// different generator tag, or an invalid entry -> CacheError naming the path.
    static CalibrationTable load(const std::filesystem::path& path);

    /// Writes the whole document to a temporary file and renames it over `path`.
    void save(const std::filesystem::path& path) const;

    std::string to_json() const;

private:
    std::map<CalibrationKey, CalibrationEntry> entries_;
};

/// Cached entry if present; otherwise calibrates, stores and returns the result.
/// A cached entry with fewer replicates than requested is recomputed.
CalibrationEntry calibrate_cached(CalibrationTable& table, const CalibrationRequest& request,
                                  unsigned workers = 0);

} // namespace nullprop

#endif // NULLPROP_CALIBRATION_TABLE_HPP
