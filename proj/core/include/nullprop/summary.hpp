#ifndef NULLPROP_SUMMARY_HPP
#define NULLPROP_SUMMARY_HPP

#include <span>

namespace nullprop
{

struct Summary
{
    double mean = 0.0;
    double median = 0.0;
    double p10 = 0.0;
    double p90 = 0.0;
    double min = 0.0;
    double max = 0.0;
};

/// Linear-interpolation quantile (Hyndman-Fan type 7) of an unsorted sample.
double quantile(std::span<const double> values, double q);

Summary summarize(std::span<const double> values);

} // namespace nullprop

#endif // NULLPROP_SUMMARY_HPP
