#include "nullprop/pvalue_sample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nullprop
{

PValueSample::PValueSample(std::vector<double> values, std::string source)
    : values_(std::move(values)), source_(std::move(source))
{
    for (std::size_t i = 0; i < values_.size(); ++i)
    {
        const double v = values_[i];
        if (!(v >= 0.0 && v <= 1.0))
        {
            throw std::invalid_argument("p-value at index " + std::to_string(i) +
                                        " is outside [0,1]: " + std::to_string(v));
        }
    }
    std::sort(values_.begin(), values_.end());
}

PValueSample PValueSample::from_sorted(std::vector<double> values, std::string source)
{
    PValueSample sample;
    sample.values_ = std::move(values);
    sample.source_ = std::move(source);
    return sample;
}

std::size_t PValueSample::count_at_most(double t) const
{
    return static_cast<std::size_t>(std::upper_bound(values_.begin(), values_.end(), t) -
                                    values_.begin());
}

double PValueSample::ecdf(double t) const
{
    if (values_.empty())
        return 0.0;
    return static_cast<double>(count_at_most(t)) / static_cast<double>(values_.size());
}

} // namespace nullprop
