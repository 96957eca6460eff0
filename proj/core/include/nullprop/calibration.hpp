#ifndef NULLPROP_CALIBRATION_HPP
#define NULLPROP_CALIBRATION_HPP

#include "nullprop/bounding.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace nullprop
{

/// Monte Carlo calibration of beta over a restricted interval:
/// the smallest beta whose simulated exceedance probability
/// P(sup_{t in (a,b)} (U_n(t) - t)/delta(t) > beta) is at most alpha.
struct CalibrationRequest
{
    std::int64_t n = 0;
    DeltaKind delta = DeltaKind::stddev;
    Interval interval;
    double alpha = 0.05;
    std::int64_t replicates = 1000;
    std::uint64_t seed = 0;

    /// n >= 1, replicates >= 100, alpha in (0,1), nondegenerate interval.
    void validate() const;
};

struct CalibrationResult
{
    double beta = 0.0;
    double achieved_level = 0.0; // fraction of replicates with statistic > beta
    std::int64_t replicates_used = 0;
    /// Standard error of the quantile estimate: half the distance between the
    /// order statistics one binomial standard deviation either side of it.
    double mc_standard_error = 0.0;
};

/// The sup statistic for each replicate, in replicate order. Replicate i draws
/// from substream (seed, i), so the output is independent of `workers`.
std::vector<double> simulate_sup_stats(std::int64_t n, DeltaKind delta, Interval interval,
                                       std::int64_t replicates, std::uint64_t seed,
                                       unsigned workers = 0);

/// 1-based rank of the conservative quantile: R - floor(alpha R). Throws if
/// alpha R < 1 (the quantile cannot be resolved with R replicates).
std::int64_t conservative_rank(double alpha, std::int64_t replicates);

/// Quantile summary of a set of simulated statistics (the input is copied and sorted).
CalibrationResult quantile_from_stats(std::span<const double> stats, double alpha);

CalibrationResult calibrate_beta(const CalibrationRequest& request, unsigned workers = 0);

} // namespace nullprop

#endif // NULLPROP_CALIBRATION_HPP
