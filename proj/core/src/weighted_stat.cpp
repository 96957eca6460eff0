#include "nullprop/weighted_stat.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nullprop
{

double weighted_excursion(DeltaKind kind, double step, double t)
{
    const double delta = eval_delta(kind, t);
    if (delta > 0.0)
        return (step - t) / delta;
    if (step > t)
        return std::numeric_limits<double>::infinity();
    return kind == DeltaKind::linear ? -1.0 : 0.0;
}

WeightedSup weighted_sup(std::span<const double> sorted, DeltaKind kind, Interval interval)
{
    if (sorted.empty())
        throw std::invalid_argument("weighted_sup_stat needs a nonempty sample");
    interval.validate();

    WeightedSup best{-std::numeric_limits<double>::infinity(), interval.lo, true, 0};
    best.jump_candidates =
        for_each_candidate(sorted, interval, [&](double t, double step, bool boundary) {
            const double value = weighted_excursion(kind, step, t);
            if (value > best.value)
            {
                best.value = value;
                best.argmax_t = t;
                best.at_left_boundary = boundary;
            }
        });
    return best;
}

} // namespace nullprop
