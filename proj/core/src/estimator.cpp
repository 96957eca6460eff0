#include "nullprop/estimator.hpp"

#include "nullprop/calibration.hpp"
#include "nullprop/calibration_table.hpp"
#include "nullprop/weighted_stat.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace nullprop
{

Interval EstimateConfig::effective_interval(std::int64_t n) const
{
    if (interval)
        return *interval;
    return n >= 3 ? Interval::truncated(n) : Interval::unit();
}

void EstimateConfig::validate(std::int64_t n) const
{
    if (n < 1)
        throw std::invalid_argument("estimate needs a nonempty sample");
    sequence.validate(delta);
    const Interval used = effective_interval(n);
    used.validate();
    if (refine_grid < 0)
        throw std::invalid_argument("refine_grid must be nonnegative");
    if (sequence.method == SequenceMethod::monte_carlo && sequence.interval &&
        CalibrationKey::make(n, delta, *sequence.interval, sequence.alpha) !=
            CalibrationKey::make(n, delta, used, sequence.alpha))
    {
        throw std::invalid_argument(
            "monte_carlo sequence was calibrated on a different interval than the estimate uses");
    }
}

double estimator_objective(DeltaKind delta, double beta, double step, double t)
{
    return (step - t - beta * eval_delta(delta, t)) / (1.0 - t);
}

EstimateReport estimate_lambda_with_beta(const PValueSample& sample, const EstimateConfig& config,
                                         double beta)
{
    const auto n = static_cast<std::int64_t>(sample.size());
    config.validate(n);
    const Interval interval = config.effective_interval(n);

    EstimateReport report;
    report.n = n;
    report.beta_used = beta;
    report.alpha = config.sequence.alpha;
    report.interval = interval;
    report.config = config;
    report.lambda_hat_raw = -std::numeric_limits<double>::infinity();

    const std::int64_t refine = config.refine_grid;
    auto consider = [&](double t, double step, bool boundary) {
        ++report.candidates;
        const double value = estimator_objective(config.delta, beta, step, t);
        if (value > report.lambda_hat_raw)
        {
            report.lambda_hat_raw = value;
            report.argmax_t = t;
            report.argmax_at_left_boundary = boundary;
        }
    };
    // Evenly spaced interior points of (lo, hi) carrying the step value at lo.
    auto refine_gap = [&](double lo, double hi, double step) {
        for (std::int64_t j = 1; j <= refine; ++j)
        {
            const double t = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(refine + 1);
            if (t > lo && t < hi)
                consider(t, step, false);
        }
    };

    double prev_t = interval.lo;
    double prev_step = 0.0;
    const std::size_t jumps =
        for_each_candidate(sample.values(), interval, [&](double t, double step, bool boundary) {
            if (!boundary && refine > 0)
                refine_gap(prev_t, t, prev_step);
            consider(t, step, boundary);
            prev_t = t;
            prev_step = step;
        });
    if (refine > 0)
        refine_gap(prev_t, interval.hi, prev_step);

    report.empty_interval = jumps == 0;
    report.lambda_hat = config.clamp ? std::clamp(report.lambda_hat_raw, 0.0, 1.0)
                                     : report.lambda_hat_raw;
    report.hc_reject = report.lambda_hat_raw > 0.0;
    report.fwer_lambda = fwer_lambda(sample, config.sequence.alpha);
    return report;
}

double resolve_beta(const EstimateConfig& config, std::int64_t n, CalibrationTable* table,
                    unsigned workers)
{
    config.validate(n);
    const BoundingSequenceSpec& seq = config.sequence;
    if (seq.method != SequenceMethod::monte_carlo)
        return analytic_beta(seq.method, n, seq.alpha);

    CalibrationRequest request;
    request.n = n;
    request.delta = config.delta;
    request.interval = config.effective_interval(n);
    request.alpha = seq.alpha;
    request.replicates = seq.replicates;
    request.seed = seq.seed;
    if (table)
        return calibrate_cached(*table, request, workers).beta;
    return calibrate_beta(request, workers).beta;
}

EstimateReport estimate_lambda(const PValueSample& sample, const EstimateConfig& config,
                               CalibrationTable* table, unsigned workers)
{
    const auto n = static_cast<std::int64_t>(sample.size());
    const double beta = resolve_beta(config, n, table, workers);
    return estimate_lambda_with_beta(sample, config, beta);
}

double fwer_lambda(const PValueSample& sample, double alpha)
{
    if (sample.empty())
        throw std::invalid_argument("fwer_lambda needs a nonempty sample");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must lie in (0,1)");
    return sample.ecdf(alpha / static_cast<double>(sample.size()));
}

bool hc_reject(const PValueSample& sample, const BoundingSequenceSpec& sequence,
               CalibrationTable* table, unsigned workers)
{
    if (sample.empty())
        throw std::invalid_argument("hc_reject needs a nonempty sample");
    const auto n = static_cast<std::int64_t>(sample.size());
    EstimateConfig config;
    config.delta = DeltaKind::stddev;
    config.sequence = sequence;
    config.interval = Interval::truncated(n);
    return estimate_lambda(sample, config, table, workers).lambda_hat_raw > 0.0;
}

bool hc_reject(const PValueSample& sample, double alpha)
{
    BoundingSequenceSpec sequence;
    sequence.method = SequenceMethod::gumbel;
    sequence.alpha = alpha;
    return hc_reject(sample, sequence);
}

} // namespace nullprop
