#ifndef NULLPROP_BOUNDING_HPP
#define NULLPROP_BOUNDING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nullprop
{

/// Shape of the allowed excursion of the uniform empirical process.
enum class DeltaKind
{
    linear,   // delta(t) = t
    constant, // delta(t) = 1
    stddev    // delta(t) = sqrt(t(1 - t))
};

/// Source of the scalar bounding sequence beta_{n,alpha}.
enum class SequenceMethod
{
    daniels,    // 1/alpha - 1, linear delta only
    dkw,        // sqrt(log(2/alpha) / 2n), constant delta only
    gumbel,     // extreme-value limit of the standardized sup, stddev delta only
    monte_carlo // simulated quantile, any delta
};

std::string_view to_string(DeltaKind kind);
std::string_view to_string(SequenceMethod method);
DeltaKind parse_delta_kind(std::string_view text);
SequenceMethod parse_sequence_method(std::string_view text);

/// Exact rational exponent; the regular-variation index of a bounding function.
struct Exponent
{
    int num = 0;
    int den = 1;

    double value() const { return static_cast<double>(num) / den; }
    friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Open interval (lo, hi) over which the supremum is taken.
struct Interval
{
    double lo = 0.0;
    double hi = 1.0;

    /// Throws std::invalid_argument unless 0 <= lo < hi <= 1.
    void validate() const;
    bool contains(double t) const { return lo < t && t < hi; }
    bool contains(const Interval& inner) const { return lo <= inner.lo && inner.hi <= hi; }

    /// (1/n, 1 - 1/n); requires n >= 3 so the interval is nondegenerate.
    static Interval truncated(std::int64_t n);
    static Interval unit() { return {0.0, 1.0}; }
};

class BoundingFunction
{
public:
    explicit BoundingFunction(DeltaKind kind) : kind_(kind) {}

    DeltaKind kind() const { return kind_; }

    /// linear -> 1, constant -> 0, stddev -> 1/2.
    Exponent nu() const;

    /// delta(t); throws std::domain_error for t outside [0,1].
    double operator()(double t) const;

    /// The one analytic sequence this function pairs with (Daniels, DKW or Gumbel).
    SequenceMethod analytic_method() const;

private:
    DeltaKind kind_;
};

double eval_delta(DeltaKind kind, double t);

bool compatible(DeltaKind kind, SequenceMethod method);

/// Result of checking membership of a bounding function in the class Q_nu on grids.
struct QNuCheck
{
    bool positive_on_interior = true;
    bool reflection_dominates = true; // delta(1-t) >= delta(t) on (0, 1/2)
    bool regular_variation = true;    // delta(bt)/delta(t) -> b^nu as t -> 0
    double worst_regular_variation_error = 0.0;

    bool ok() const { return positive_on_interior && reflection_dominates && regular_variation; }
};

/// Grid checks: positivity and reflection on 10^4 interior points, and the
/// ratio delta(2t)/delta(t) against 2^nu at t = 10^-k, k = 2..8.
QNuCheck check_q_nu(DeltaKind kind, double tolerance = 1e-3);

/// 1/alpha - 1; independent of n.
double daniels_beta(double alpha);

/// sqrt(log(2/alpha) / (2n)).
double dkw_beta(std::int64_t n, double alpha);

/// Gumbel normalizing constants for the standardized sup; natural logs, n >= 16.
struct GumbelConstants
{
    double a_n;
    double b_n;
};

GumbelConstants gumbel_constants(std::int64_t n);

/// Inverse of the Gumbel cdf exp(-exp(-x)).
double gumbel_quantile(double p);

/// (gumbel_quantile(1 - alpha) + b_n) / a_n; requires n >= 16.
double gumbel_beta(std::int64_t n, double alpha);

/// Closed-form beta for an analytic method; throws for monte_carlo.
double analytic_beta(SequenceMethod method, std::int64_t n, double alpha);

struct MonotoneReport
{
    bool monotone = true;
    std::optional<std::int64_t> first_violation; // the n at which n*beta dropped
};

/// Checks that n * beta_{n,alpha} is nondecreasing along a strictly increasing grid.
MonotoneReport n_beta_monotone_check(SequenceMethod method, double alpha,
                                     std::span<const std::int64_t> n_grid);

/// How beta_{n,alpha} is obtained for one estimate.
struct BoundingSequenceSpec
{
    SequenceMethod method = SequenceMethod::gumbel;
    double alpha = 0.05;
    /// Only meaningful for monte_carlo; unset means the estimator's interval.
    std::optional<Interval> interval;
    /// Monte Carlo settings used when no cached entry is available.
    std::int64_t replicates = 1000;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument for alpha outside (0,1), a bad interval,
    /// or a method incompatible with the bounding function.
    void validate(DeltaKind kind) const;
};

} // namespace nullprop

#endif // NULLPROP_BOUNDING_HPP
