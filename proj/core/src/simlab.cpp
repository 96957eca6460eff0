#include "nullprop/simlab.hpp"

#include "nullprop/parallel.hpp"
#include "nullprop/random.hpp"
#include "nullprop/subbotin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nullprop
{

double calibrated_shift(double kappa, double r, std::int64_t n)
{
    if (!(kappa > 0.0) || !(r > 0.0) || n < 2)
        throw std::invalid_argument("calibrated_shift needs kappa > 0, r > 0, n >= 2");
    return std::pow(kappa * r * std::log(static_cast<double>(n)), 1.0 / kappa);
}

double ShiftModel::mu() const
{
    if (mu_override)
        return *mu_override;
    return calibrated_shift(kappa, r, n);
}

std::int64_t ShiftModel::alternatives() const
{
    // ceil with a relative guard so that lambda * n = 10.000000000000002 counts as 10.
    const double target = lambda_true * static_cast<double>(n);
    return static_cast<std::int64_t>(std::ceil(target * (1.0 - 1e-12)));
}

double ShiftModel::realized_lambda() const
{
    return static_cast<double>(alternatives()) / static_cast<double>(n);
}

void ShiftModel::validate() const
{
    if (!(kappa > 0.0))
        throw std::invalid_argument("shift model needs kappa > 0");
    if (n < 1)
        throw std::invalid_argument("shift model needs n >= 1");
    if (!(lambda_true >= 0.0 && lambda_true <= 1.0))
        throw std::invalid_argument("lambda_true must lie in [0,1]");
    if (lambda_true > 0.0 && lambda_true * static_cast<double>(n) < 1.0 - 1e-12)
        throw std::invalid_argument("lambda_true * n must be at least 1");
    if (mu_override)
    {
        if (!(*mu_override >= 0.0))
            throw std::invalid_argument("shift mu must be nonnegative");
    }
    else if (!(r > 0.0 && r < 1.0))
    {
        throw std::invalid_argument("r must lie in (0,1) when the shift is derived from n");
    }
}

PValueSample sample_shift_model(const ShiftModel& model, std::uint64_t replicate)
{
    model.validate();
    const double mu = model.mu();
    const std::int64_t k = model.alternatives();
    Stream stream(model.seed, replicate);
    std::vector<double> p(static_cast<std::size_t>(model.n));
    for (std::int64_t i = 0; i < model.n; ++i)
    {
        double z = sample_subbotin(stream, model.kappa);
        if (i < k)
            z += mu;
        p[static_cast<std::size_t>(i)] = subbotin_sf(model.kappa, z);
    }
    std::sort(p.begin(), p.end());
    return PValueSample::from_sorted(std::move(p), "shift-model");
}

std::vector<QuantileScalingPoint> quantile_scaling_check(double kappa, double r, double q,
                                                         std::span<const std::int64_t> n_grid)
{
    if (!(q > 0.0 && q < 1.0))
        throw std::invalid_argument("quantile level q must lie in (0,1)");
    const double offset = subbotin_isf(kappa, q);
    std::vector<QuantileScalingPoint> points;
    points.reserve(n_grid.size());
    for (const std::int64_t n : n_grid)
    {
        const double mu = calibrated_shift(kappa, r, n);
        const double log_q = subbotin_log_sf(kappa, mu + offset);
        points.push_back({n, mu, log_q, log_q / std::log(static_cast<double>(n))});
    }
    return points;
}

PowerCurveResult power_curve(std::span<const ShiftModel> models,
                             std::span<const EstimateConfig> configs, std::int64_t replicates,
                             CalibrationTable* table, unsigned workers)
{
    if (replicates < 1)
        throw std::invalid_argument("power_curve needs replicates >= 1");

    PowerCurveResult result;
    for (const ShiftModel& model : models)
    {
        model.validate();
        const double lambda = model.realized_lambda();
        if (!(lambda > 0.0))
            throw std::invalid_argument("power_curve needs lambda_true > 0 to form ratios");

        std::vector<double> betas;
        for (const EstimateConfig& config : configs)
            betas.push_back(resolve_beta(config, model.n, table, workers));

        // ratios[c][i]: config c, replicate i
        std::vector<std::vector<double>> ratios(
            configs.size(), std::vector<double>(static_cast<std::size_t>(replicates)));
        parallel_for(static_cast<std::size_t>(replicates), workers, [&](std::size_t i) {
            const PValueSample sample = sample_shift_model(model, i);
            for (std::size_t c = 0; c < configs.size(); ++c)
            {
                EstimateConfig clamped = configs[c];
                clamped.clamp = true;
                const EstimateReport report = estimate_lambda_with_beta(sample, clamped, betas[c]);
                ratios[c][i] = report.lambda_hat / lambda;
            }
        });

        for (std::size_t c = 0; c < configs.size(); ++c)
        {
            PowerCurveRow row;
            row.model = model;
            row.config = configs[c];
            row.beta = betas[c];
            row.replicates = replicates;
            row.ratio = summarize(ratios[c]);
            row.fraction_zero =
                static_cast<double>(std::count(ratios[c].begin(), ratios[c].end(), 0.0)) /
                static_cast<double>(replicates);
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

DanielsResult daniels_check(std::int64_t n, double lam, std::int64_t replicates,
                            std::uint64_t seed, unsigned workers)
{
    if (n < 1 || replicates < 1)
        throw std::invalid_argument("daniels_check needs n >= 1 and replicates >= 1");
    if (!(lam > 1.0))
        throw std::invalid_argument("daniels_check needs lam > 1");

    std::vector<unsigned char> hit(static_cast<std::size_t>(replicates));
    const auto size = static_cast<std::size_t>(n);
    const double inv_n = 1.0 / static_cast<double>(n);
    parallel_for(hit.size(), workers, [&](std::size_t r) {
        thread_local std::vector<double> u;
        u.resize(size);
        Stream stream(seed, r);
        sorted_uniforms(stream, u);
        double sup = 0.0;
        for (std::size_t i = 0; i < size; ++i)
            sup = std::max(sup, static_cast<double>(i + 1) * inv_n / u[i]);
        hit[r] = sup >= lam ? 1 : 0;
    });

    DanielsResult result;
    result.n = n;
    result.lam = lam;
    result.replicates = replicates;
    const auto hits = std::count(hit.begin(), hit.end(), static_cast<unsigned char>(1));
    result.probability = static_cast<double>(hits) / static_cast<double>(replicates);
    result.standard_error =
        std::sqrt(result.probability * (1.0 - result.probability) / static_cast<double>(replicates));
    result.expected = 1.0 / lam;
    return result;
}

} // namespace nullprop
