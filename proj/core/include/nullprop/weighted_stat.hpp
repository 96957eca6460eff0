#ifndef NULLPROP_WEIGHTED_STAT_HPP
#define NULLPROP_WEIGHTED_STAT_HPP

#include "nullprop/bounding.hpp"

#include <algorithm>
#include <cstddef>
#include <span>

namespace nullprop
{

// Candidate points for suprema over an open interval (a, b) of functions of
// the form g(F_n(t), t), where F_n is a right-continuous empirical cdf:
//
//   * the left boundary t = a, carrying the step value F_n(a) (the limit
//     from the right, since F_n is constant on (a, first jump));
//   * every distinct order statistic u in (a, b), carrying F_n(u), i.e. the
//     value after the jump (a k-fold tie jumps by k/n).
//
// For all three bounding functions both the weighted excursion
// (F - t)/delta(t) and the estimator objective (F - t - beta delta(t))/(1 - t)
// are strictly decreasing in t between jumps, so the maximum over this set is
// the supremum over (a, b). Calibration and estimation share this routine.

/// Calls visit(t, step, is_left_boundary) for every candidate. Returns the
/// number of order-statistic candidates (the boundary is not counted).
template <typename Visit>
std::size_t for_each_candidate(std::span<const double> sorted, Interval interval, Visit&& visit)
{
    const std::size_t n = sorted.size();
    // Divide rather than multiply by 1/n so steps match PValueSample::ecdf bit for bit.
    const double dn = static_cast<double>(n);
    auto it = std::upper_bound(sorted.begin(), sorted.end(), interval.lo);
    std::size_t index = static_cast<std::size_t>(it - sorted.begin());
    visit(interval.lo, static_cast<double>(index) / dn, true);

    std::size_t jumps = 0;
    while (index < n && sorted[index] < interval.hi)
    {
        const double u = sorted[index];
        while (index + 1 < n && sorted[index + 1] == u)
            ++index;
        ++index;
        visit(u, static_cast<double>(index) / dn, false);
        ++jumps;
    }
    return jumps;
}

/// (step - t) / delta(t), with the right-limit convention where delta(t) = 0
/// (only t = 0 for linear/stddev): +inf if step > 0, otherwise the limit of
/// -t/delta(t), i.e. -1 for linear and 0 for stddev.
double weighted_excursion(DeltaKind kind, double step, double t);

struct WeightedSup
{
    double value;
    double argmax_t;
    bool at_left_boundary;
    std::size_t jump_candidates;
};

/// sup_{t in (a,b)} (U_n(t) - t) / delta(t) for a sorted sample in [0,1].
WeightedSup weighted_sup(std::span<const double> sorted, DeltaKind kind, Interval interval);

inline double weighted_sup_stat(std::span<const double> sorted, DeltaKind kind, Interval interval)
{
    return weighted_sup(sorted, kind, interval).value;
}

} // namespace nullprop

#endif // NULLPROP_WEIGHTED_STAT_HPP
