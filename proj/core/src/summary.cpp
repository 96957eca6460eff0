#include "nullprop/summary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace nullprop
{

namespace
{

double sorted_quantile(const std::vector<double>& sorted, double q)
{
    const double h = (static_cast<double>(sorted.size()) - 1.0) * q;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

} // namespace

double quantile(std::span<const double> values, double q)
{
    if (values.empty())
        throw std::invalid_argument("quantile of an empty sample");
    if (!(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("quantile level must lie in [0,1]");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    return sorted_quantile(sorted, q);
}

Summary summarize(std::span<const double> values)
{
    if (values.empty())
        throw std::invalid_argument("summary of an empty sample");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    Summary s;
    s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(sorted.size());
    s.median = sorted_quantile(sorted, 0.5);
    s.p10 = sorted_quantile(sorted, 0.1);
    s.p90 = sorted_quantile(sorted, 0.9);
    s.min = sorted.front();
    s.max = sorted.back();
    return s;
}

} // namespace nullprop
