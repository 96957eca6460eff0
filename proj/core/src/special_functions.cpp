#include "nullprop/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nullprop::special
{

namespace
{

constexpr int max_iterations = 100000;
constexpr double eps = std::numeric_limits<double>::epsilon();

void require_domain(double a, double x)
{
    if (!(a > 0.0) || !(x >= 0.0))
        throw std::domain_error("incomplete gamma needs a > 0 and x >= 0");
}

// log of x^a e^-x / Gamma(a), the common prefactor of both expansions.
double log_prefactor(double a, double x) { return a * std::log(x) - x - std::lgamma(a); }

// Sum_{k>=0} x^k / (a (a+1) ... (a+k)); P = prefactor * series.
double p_series(double a, double x)
{
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int k = 0; k < max_iterations; ++k)
    {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * eps)
            return sum;
    }
    throw std::runtime_error("incomplete gamma series failed to converge");
}

// Modified Lentz evaluation of the continued fraction for Q / prefactor.
double q_continued_fraction(double a, double x)
{
    constexpr double tiny = std::numeric_limits<double>::min() / eps;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < max_iterations; ++i)
    {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < eps)
            return h;
    }
    throw std::runtime_error("incomplete gamma continued fraction failed to converge");
}

} // namespace

double gamma_p(double a, double x)
{
    require_domain(a, x);
    if (x == 0.0)
        return 0.0;
    if (x < a + 1.0)
        return std::exp(log_prefactor(a, x)) * p_series(a, x);
    return 1.0 - std::exp(log_prefactor(a, x)) * q_continued_fraction(a, x);
}

double gamma_q(double a, double x)
{
    require_domain(a, x);
    if (x == 0.0)
        return 1.0;
    if (x < a + 1.0)
        return 1.0 - std::exp(log_prefactor(a, x)) * p_series(a, x);
    return std::exp(log_prefactor(a, x)) * q_continued_fraction(a, x);
}

double log_gamma_q(double a, double x)
{
    require_domain(a, x);
    if (x == 0.0)
        return 0.0;
    if (x < a + 1.0)
        return std::log1p(-std::exp(log_prefactor(a, x)) * p_series(a, x));
    return log_prefactor(a, x) + std::log(q_continued_fraction(a, x));
}

} // namespace nullprop::special
