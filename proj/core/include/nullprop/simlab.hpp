#ifndef NULLPROP_SIMLAB_HPP
#define NULLPROP_SIMLAB_HPP

#include "nullprop/estimator.hpp"
#include "nullprop/pvalue_sample.hpp"
#include "nullprop/summary.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace nullprop
{

class CalibrationTable;

/// One-sided shift-location testing problem. Null statistics follow the
/// standardized Subbotin law with shape kappa; a fixed count ceil(lambda n)
/// of alternatives is shifted by mu.
struct ShiftModel
{
    double kappa = 2.0;
    double r = 0.5;
    std::int64_t n = 1000;
    double lambda_true = 0.01;
    std::uint64_t seed = 0;
    /// Use this shift instead of (kappa r log n)^(1/kappa).
    std::optional<double> mu_override;

    double mu() const;
    std::int64_t alternatives() const;
    /// Realized proportion alternatives() / n.
    double realized_lambda() const;
    void validate() const;
};

/// (kappa r log n)^(1/kappa).
double calibrated_shift(double kappa, double r, std::int64_t n);

/// Draws the p-values P = subbotin_sf(kappa, Z) for replicate `replicate`
/// (stream (seed, replicate)), sorted.
PValueSample sample_shift_model(const ShiftModel& model, std::uint64_t replicate = 0);

struct QuantileScalingPoint
{
    std::int64_t n;
    double mu;
    double log_quantile; // log G^{-1}(q)
    double ratio;        // log G^{-1}(q) / log n, tends to -r
};

/// q-quantile of the alternative p-value law, G^{-1}(q) = sf(mu_n + isf(q)),
/// evaluated in log space along an increasing grid of n.
std::vector<QuantileScalingPoint> quantile_scaling_check(double kappa, double r, double q,
                                                         std::span<const std::int64_t> n_grid);

struct PowerCurveRow
{
    ShiftModel model;
    EstimateConfig config;
    double beta = 0.0;
    std::int64_t replicates = 0;
    Summary ratio;             // lambda_hat / realized lambda
    double fraction_zero = 0.0; // replicates with lambda_hat == 0
};

struct PowerCurveResult
{
    std::vector<PowerCurveRow> rows; // models outer, configs inner
};

/// For every (model, config) pair, estimates lambda on `replicates` draws of
/// the model. Replicate i of a model uses the same draw for every config.
PowerCurveResult power_curve(std::span<const ShiftModel> models,
                             std::span<const EstimateConfig> configs, std::int64_t replicates,
                             CalibrationTable* table = nullptr, unsigned workers = 0);

struct DanielsResult
{
    std::int64_t n = 0;
    double lam = 0.0;
    std::int64_t replicates = 0;
    double probability = 0.0;
    double standard_error = 0.0;
    double expected = 0.0; // 1 / lam
};

/// Monte Carlo estimate of P(sup_t U_n(t)/t >= lam), the sup taken over the
/// order statistics as max_i (i/n) / u_(i).
DanielsResult daniels_check(std::int64_t n, double lam, std::int64_t replicates,
                            std::uint64_t seed, unsigned workers = 0);

} // namespace nullprop

#endif // NULLPROP_SIMLAB_HPP
