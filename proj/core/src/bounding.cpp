#include "nullprop/bounding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nullprop
{

namespace
{

void require_alpha(double alpha)
{
    if (!(alpha > 0.0 && alpha < 1.0))
    {
        throw std::domain_error("alpha must lie in (0,1), got " + std::to_string(alpha));
    }
}

} // namespace

std::string_view to_string(DeltaKind kind)
{
    switch (kind)
    {
    case DeltaKind::linear:
        return "linear";
    case DeltaKind::constant:
        return "constant";
    case DeltaKind::stddev:
        return "stddev";
    }
    return "unknown";
}

std::string_view to_string(SequenceMethod method)
{
    switch (method)
    {
    case SequenceMethod::daniels:
        return "daniels";
    case SequenceMethod::dkw:
        return "dkw";
    case SequenceMethod::gumbel:
        return "gumbel";
    case SequenceMethod::monte_carlo:
        return "monte_carlo";
    }
    return "unknown";
}

DeltaKind parse_delta_kind(std::string_view text)
{
    if (text == "linear")
        return DeltaKind::linear;
    if (text == "constant")
        return DeltaKind::constant;
    if (text == "stddev")
        return DeltaKind::stddev;
    throw std::invalid_argument("unknown bounding function '" + std::string(text) +
                                "' (expected linear|constant|stddev)");
}

SequenceMethod parse_sequence_method(std::string_view text)
{
    if (text == "daniels")
        return SequenceMethod::daniels;
    if (text == "dkw")
        return SequenceMethod::dkw;
    if (text == "gumbel")
        return SequenceMethod::gumbel;
    if (text == "monte_carlo" || text == "monte-carlo" || text == "mc")
        return SequenceMethod::monte_carlo;
    throw std::invalid_argument("unknown bounding sequence '" + std::string(text) +
                                "' (expected daniels|dkw|gumbel|monte_carlo)");
}

void Interval::validate() const
{
    if (!(lo >= 0.0 && hi <= 1.0 && lo < hi))
    {
        throw std::invalid_argument("interval must satisfy 0 <= lo < hi <= 1, got (" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + ")");
    }
}

Interval Interval::truncated(std::int64_t n)
{
    if (n < 3)
    {
        throw std::invalid_argument("truncated interval (1/n, 1-1/n) needs n >= 3");
    }
    const double inv = 1.0 / static_cast<double>(n);
    return {inv, 1.0 - inv};
}

Exponent BoundingFunction::nu() const
{
    switch (kind_)
    {
    case DeltaKind::linear:
        return {1, 1};
    case DeltaKind::constant:
        return {0, 1};
    case DeltaKind::stddev:
        return {1, 2};
    }
    return {};
}

double BoundingFunction::operator()(double t) const { return eval_delta(kind_, t); }

SequenceMethod BoundingFunction::analytic_method() const
{
    switch (kind_)
    {
    case DeltaKind::linear:
        return SequenceMethod::daniels;
    case DeltaKind::constant:
        return SequenceMethod::dkw;
    case DeltaKind::stddev:
        return SequenceMethod::gumbel;
    }
    return SequenceMethod::monte_carlo;
}

double eval_delta(DeltaKind kind, double t)
{
    if (!(t >= 0.0 && t <= 1.0))
    {
        throw std::domain_error("bounding function evaluated outside [0,1]: t = " +
                                std::to_string(t));
    }
    switch (kind)
    {
    case DeltaKind::linear:
        return t;
    case DeltaKind::constant:
        return 1.0;
    case DeltaKind::stddev:
        return std::sqrt(t * (1.0 - t));
    }
    return 0.0;
}

bool compatible(DeltaKind kind, SequenceMethod method)
{
    return method == SequenceMethod::monte_carlo ||
           BoundingFunction(kind).analytic_method() == method;
}

QNuCheck check_q_nu(DeltaKind kind, double tolerance)
{
    QNuCheck check;
    const BoundingFunction delta(kind);
    constexpr int grid = 10000;
    for (int i = 1; i < grid; ++i)
    {
        const double t = static_cast<double>(i) / grid;
        if (!(delta(t) > 0.0))
            check.positive_on_interior = false;
        // 1 - (1 - t) need not round back to t, so allow a few ulps.
        if (t < 0.5 && delta(1.0 - t) < delta(t) * (1.0 - 1e-12))
            check.reflection_dominates = false;
    }

    const double b = 2.0;
    const double expected = std::pow(b, delta.nu().value());
    for (int k = 2; k <= 8; ++k)
    {
        const double t = std::pow(10.0, -k);
        const double err = std::abs(delta(b * t) / delta(t) - expected);
        check.worst_regular_variation_error = std::max(check.worst_regular_variation_error, err);
    }
    check.regular_variation = check.worst_regular_variation_error <= tolerance;
    return check;
}

double daniels_beta(double alpha)
{
    require_alpha(alpha);
    return 1.0 / alpha - 1.0;
}

double dkw_beta(std::int64_t n, double alpha)
{
    require_alpha(alpha);
    if (n < 1)
        throw std::domain_error("dkw_beta needs n >= 1");
    return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(n)));
}

GumbelConstants gumbel_constants(std::int64_t n)
{
    if (n < 16)
        throw std::domain_error("Gumbel bounding sequence needs n >= 16, got " + std::to_string(n));
    const double loglog = std::log(std::log(static_cast<double>(n)));
    const double a_n = std::sqrt(2.0 * static_cast<double>(n) * loglog);
    const double b_n =
        2.0 * loglog + 0.5 * std::log(loglog) - 0.5 * std::log(4.0 * std::numbers::pi);
    return {a_n, b_n};
}

double gumbel_quantile(double p)
{
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("Gumbel quantile needs p in (0,1)");
    return -std::log(-std::log(p));
}

double gumbel_beta(std::int64_t n, double alpha)
{
    require_alpha(alpha);
    const auto [a_n, b_n] = gumbel_constants(n);
    return (gumbel_quantile(1.0 - alpha) + b_n) / a_n;
}

double analytic_beta(SequenceMethod method, std::int64_t n, double alpha)
{
    switch (method)
    {
    case SequenceMethod::daniels:
        return daniels_beta(alpha);
    case SequenceMethod::dkw:
        return dkw_beta(n, alpha);
    case SequenceMethod::gumbel:
        return gumbel_beta(n, alpha);
    case SequenceMethod::monte_carlo:
        break;
    }
    throw std::invalid_argument("monte_carlo bounding sequences have no closed form");
}

MonotoneReport n_beta_monotone_check(SequenceMethod method, double alpha,
                                     std::span<const std::int64_t> n_grid)
{
    MonotoneReport report;
    double previous = -std::numeric_limits<double>::infinity();
    for (const std::int64_t n : n_grid)
    {
        const double scaled = static_cast<double>(n) * analytic_beta(method, n, alpha);
        if (scaled < previous)
        {
            report.monotone = false;
            report.first_violation = n;
            break;
        }
        previous = scaled;
    }
    return report;
}

void BoundingSequenceSpec::validate(DeltaKind kind) const
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must lie in (0,1)");
    if (!compatible(kind, method))
    {
        throw std::invalid_argument("bounding sequence '" + std::string(to_string(method)) +
                                    "' cannot be used with the " + std::string(to_string(kind)) +
                                    " bounding function");
    }
    if (interval)
        interval->validate();
    if (method == SequenceMethod::monte_carlo && replicates < 1)
        throw std::invalid_argument("monte_carlo sequence needs replicates >= 1");
}

} // namespace nullprop
