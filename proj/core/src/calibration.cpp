#include "nullprop/calibration.hpp"

#include "nullprop/parallel.hpp"
#include "nullprop/random.hpp"
#include "nullprop/weighted_stat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nullprop
{

void CalibrationRequest::validate() const
{
    if (n < 1)
        throw std::invalid_argument("calibration needs n >= 1");
    if (replicates < 100)
        throw std::invalid_argument("calibration needs at least 100 replicates, got " +
                                    std::to_string(replicates));
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must lie in (0,1)");
    interval.validate();
}

std::vector<double> simulate_sup_stats(std::int64_t n, DeltaKind delta, Interval interval,
                                       std::int64_t replicates, std::uint64_t seed,
                                       unsigned workers)
{
    if (n < 1 || replicates < 1)
        throw std::invalid_argument("simulate_sup_stats needs n >= 1 and replicates >= 1");
    interval.validate();

    std::vector<double> stats(static_cast<std::size_t>(replicates));
    const auto size = static_cast<std::size_t>(n);
    parallel_for(stats.size(), workers, [&](std::size_t r) {
        thread_local std::vector<double> buffer;
        buffer.resize(size);
        Stream stream(seed, r);
        sorted_uniforms(stream, buffer);
        stats[r] = weighted_sup_stat(buffer, delta, interval);
    });
    return stats;
}

std::int64_t conservative_rank(double alpha, std::int64_t replicates)
{
    // floor(alpha R) with a relative guard so that e.g. 0.05 * 1000 is 50, not 49.
    const auto allowed = static_cast<std::int64_t>(
        std::floor(alpha * static_cast<double>(replicates) * (1.0 + 1e-12)));
    if (allowed < 1)
    {
        throw std::invalid_argument(
            "alpha * replicates < 1: " + std::to_string(replicates) +
            " replicates cannot resolve the upper alpha quantile; use at least " +
            std::to_string(static_cast<std::int64_t>(std::ceil(1.0 / alpha))) + " replicates");
    }
    return replicates - allowed;
}

CalibrationResult quantile_from_stats(std::span<const double> stats, double alpha)
{
    const auto replicates = static_cast<std::int64_t>(stats.size());
    const std::int64_t rank = conservative_rank(alpha, replicates);

    std::vector<double> sorted(stats.begin(), stats.end());
    std::sort(sorted.begin(), sorted.end());

    CalibrationResult result;
    result.replicates_used = replicates;
    result.beta = sorted[static_cast<std::size_t>(rank - 1)];
    const auto exceed = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), result.beta);
    result.achieved_level = static_cast<double>(exceed) / static_cast<double>(replicates);

    const double p = 1.0 - alpha;
    const auto spread = static_cast<std::int64_t>(
        std::ceil(std::sqrt(static_cast<double>(replicates) * p * (1.0 - p))));
    const std::int64_t lo = std::max<std::int64_t>(rank - spread, 1);
    const std::int64_t hi = std::min<std::int64_t>(rank + spread, replicates);
    result.mc_standard_error =
        0.5 * (sorted[static_cast<std::size_t>(hi - 1)] - sorted[static_cast<std::size_t>(lo - 1)]);
    return result;
}

CalibrationResult calibrate_beta(const CalibrationRequest& request, unsigned workers)
{
    request.validate();
    // Fail on an unresolvable quantile before simulating.
    conservative_rank(request.alpha, request.replicates);
    const std::vector<double> stats = simulate_sup_stats(
        request.n, request.delta, request.interval, request.replicates, request.seed, workers);
    return quantile_from_stats(stats, request.alpha);
}

} // namespace nullprop
