#include "nullprop/subbotin.hpp"

#include "nullprop/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nullprop
{

namespace
{

void require_kappa(double kappa)
{
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw std::domain_error("Subbotin shape kappa must be positive");
}

double scaled_power(double kappa, double x) { return std::pow(x, kappa) / kappa; }

} // namespace

double subbotin_sf(double kappa, double x)
{
    require_kappa(kappa);
    const double a = 1.0 / kappa;
    if (x >= 0.0)
        return 0.5 * special::gamma_q(a, scaled_power(kappa, x));
    return 1.0 - 0.5 * special::gamma_q(a, scaled_power(kappa, -x));
}

double subbotin_log_sf(double kappa, double x)
{
    require_kappa(kappa);
    if (x >= 0.0)
        return -std::numbers::ln2 + special::log_gamma_q(1.0 / kappa, scaled_power(kappa, x));
    return std::log(subbotin_sf(kappa, x));
}

double subbotin_isf(double kappa, double p)
{
    require_kappa(kappa);
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("subbotin_isf needs p in (0,1)");
    if (p == 0.5)
        return 0.0;
    if (p > 0.5)
        return -subbotin_isf(kappa, 1.0 - p);

    // Solve log Q(a, y) = log(2p) for y = x^kappa / kappa by bisection on a
    // bracket grown geometrically; log Q is strictly decreasing in y.
    const double a = 1.0 / kappa;
    const double target = std::log(2.0 * p);
    double lo = 0.0;
    double hi = 1.0;
    while (special::log_gamma_q(a, hi) > target)
    {
        lo = hi;
        hi *= 2.0;
    }
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i)
    {
        const double mid = 0.5 * (lo + hi);
        if (special::log_gamma_q(a, mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return std::pow(kappa * 0.5 * (lo + hi), a);
}

double sample_subbotin(Stream& stream, double kappa)
{
    require_kappa(kappa);
    const double magnitude = std::pow(kappa * stream.gamma(1.0 / kappa), 1.0 / kappa);
    return (stream() >> 63) ? magnitude : -magnitude;
}

} // namespace nullprop
