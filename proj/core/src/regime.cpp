#include "nullprop/regime.hpp"

#include <stdexcept>

namespace nullprop
{

namespace
{

Regime compare_to_threshold(double r, double threshold)
{
    if (r > threshold)
        return Regime::full_detection;
    if (r < threshold)
        return Regime::no_detection;
    return Regime::boundary;
}

} // namespace

std::string_view to_string(Regime regime)
{
    switch (regime)
    {
    case Regime::full_detection:
        return "full_detection";
    case Regime::no_detection:
        return "no_detection";
    case Regime::boundary:
        return "boundary";
    case Regime::not_covered:
        return "not_covered";
    }
    return "unknown";
}

void RegimeQuery::validate() const
{
    if (nu.den <= 0 || nu.num < 0 || nu.num > nu.den)
        throw std::invalid_argument("nu must be a rational in [0,1]");
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw std::invalid_argument("gamma must lie in [0,1)");
    // r > 1 is allowed so grids can extend past the Bonferroni boundary.
    if (!(r > 0.0))
        throw std::invalid_argument("r must be positive");
}

Regime regime_classify(const RegimeQuery& query)
{
    query.validate();
    const int num = query.nu.num;
    const int den = query.nu.den;
    const bool at_most_half = 2 * num <= den;
    const double gamma = query.gamma;

    if (at_most_half)
    {
        if (gamma < 0.5)
            return Regime::full_detection;
        if (num == 0)
            return Regime::no_detection;
        const double threshold = (gamma - 0.5) * den / num;
        return compare_to_threshold(query.r, threshold);
    }

    const double nu = query.nu.value();
    if (gamma > 1.0 - nu && gamma < 0.5)
        return Regime::no_detection;
    if (num == den && gamma >= 0.5)
        return compare_to_threshold(query.r, gamma);
    return Regime::not_covered;
}

Regime fwer_regime(double gamma, double r)
{
    if (!(gamma >= 0.0 && gamma < 1.0) || !(r > 0.0))
        throw std::invalid_argument("fwer_regime needs gamma in [0,1) and r > 0");
    return compare_to_threshold(r, 1.0);
}

std::vector<RegimeCell> regime_grid(std::span<const Exponent> nus, int size, double r_max)
{
    if (size < 1)
        throw std::invalid_argument("regime grid size must be positive");
    if (!(r_max > 0.0))
        throw std::invalid_argument("regime grid r_max must be positive");
    std::vector<RegimeCell> cells;
    cells.reserve(nus.size() * static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
    for (const Exponent nu : nus)
    {
        for (int i = 0; i < size; ++i)
        {
            const double gamma = static_cast<double>(i) / size;
            for (int j = 0; j < size; ++j)
            {
                const double r = r_max * static_cast<double>(j + 1) / (size + 1);
                cells.push_back({nu, gamma, r, regime_classify({nu, gamma, r}), fwer_regime(gamma, r)});
            }
        }
    }
    return cells;
}

} // namespace nullprop
