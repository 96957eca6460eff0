#ifndef NULLPROP_ESTIMATOR_HPP
#define NULLPROP_ESTIMATOR_HPP

#include "nullprop/bounding.hpp"
#include "nullprop/pvalue_sample.hpp"

#include <cstdint>
#include <optional>

namespace nullprop
{

class CalibrationTable;

/// Configuration of the lower confidence bound for the proportion of false nulls.
struct EstimateConfig
{
    DeltaKind delta = DeltaKind::stddev;
    BoundingSequenceSpec sequence;
    /// Unset: (1/n, 1 - 1/n) when n >= 3, otherwise (0, 1).
    std::optional<Interval> interval;
    /// Extra evenly spaced evaluation points inside each gap between candidates.
    std::int64_t refine_grid = 0;
    /// When false, lambda_hat reports the raw value unclamped.
    bool clamp = true;

    Interval effective_interval(std::int64_t n) const;

    /// Throws std::invalid_argument on an incompatible sequence, a bad
    /// interval, or a monte_carlo interval that differs from the estimator's.
    void validate(std::int64_t n) const;
};

struct EstimateReport
{
    double lambda_hat_raw = 0.0; // may be negative
    double lambda_hat = 0.0;
    double argmax_t = 0.0;
    bool argmax_at_left_boundary = false;
    /// No order statistic fell inside the interval; only the boundary was evaluated.
    bool empty_interval = false;
    std::int64_t n = 0;
    std::int64_t candidates = 0; // total evaluation points, boundary included
    double beta_used = 0.0;
    double alpha = 0.0;
    Interval interval;
    EstimateConfig config;
    bool hc_reject = false; // lambda_hat_raw > 0
    double fwer_lambda = 0.0;
};

/// (step - t - beta delta(t)) / (1 - t) for t in [0,1).
double estimator_objective(DeltaKind delta, double beta, double step, double t);

/// The estimate for an explicitly supplied beta; no calibration or lookup.
EstimateReport estimate_lambda_with_beta(const PValueSample& sample, const EstimateConfig& config,
                                         double beta);

/// beta_{n,alpha} for this configuration. monte_carlo sequences are looked up
/// in `table` when given (and stored there when missing), else simulated
/// with the sequence's replicates and seed.
double resolve_beta(const EstimateConfig& config, std::int64_t n, CalibrationTable* table = nullptr,
                    unsigned workers = 0);

EstimateReport estimate_lambda(const PValueSample& sample, const EstimateConfig& config,
                               CalibrationTable* table = nullptr, unsigned workers = 0);

/// F_n(alpha / n): proportion of p-values passing a Bonferroni threshold.
double fwer_lambda(const PValueSample& sample, double alpha);

/// Higher-criticism global-null test: stddev delta on the truncated interval,
/// rejects when the raw estimate is positive. `sequence` must be gumbel
/// (n >= 16) or monte_carlo.
bool hc_reject(const PValueSample& sample, const BoundingSequenceSpec& sequence,
               CalibrationTable* table = nullptr, unsigned workers = 0);

/// Gumbel-sequence variant at level alpha.
bool hc_reject(const PValueSample& sample, double alpha);

} // namespace nullprop

#endif // NULLPROP_ESTIMATOR_HPP
