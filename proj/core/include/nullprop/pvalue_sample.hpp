#ifndef NULLPROP_PVALUE_SAMPLE_HPP
#define NULLPROP_PVALUE_SAMPLE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace nullprop
{

/// An immutable, sorted collection of p-values in [0,1].
class PValueSample
{
public:
    PValueSample() = default;

    /// Validates every value (NaN or outside [0,1] throws std::invalid_argument,
    /// naming the offending index) and sorts ascending.
    explicit PValueSample(std::vector<double> values, std::string source = {});

    /// Takes ownership of values already known to be sorted and valid.
    static PValueSample from_sorted(std::vector<double> values, std::string source = {});

    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    const std::string& source() const { return source_; }

    /// Right-continuous empirical cdf: #{P_i <= t} / n.
    double ecdf(double t) const;

    /// #{P_i <= t}.
    std::size_t count_at_most(double t) const;

private:
    std::vector<double> values_;
    std::string source_;
};

} // namespace nullprop

#endif // NULLPROP_PVALUE_SAMPLE_HPP
