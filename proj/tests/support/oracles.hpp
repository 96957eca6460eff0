#ifndef NULLPROP_TEST_ORACLES_HPP
#define NULLPROP_TEST_ORACLES_HPP

// Reference implementations that share no code with the library: the bounding
// functions written out again, closed-form tails, and a dense-grid supremum.

#include <cmath>
#include <cstddef>
#include <span>
#include <string_view>

namespace oracle
{

// High-precision values (30 digits, mpmath) rounded to double.
inline constexpr double dkw_1000_005 = 0.0429469408346737562;
inline constexpr double dkw_2000_005 = 0.0303680730954152584;
inline constexpr double stddev_at_0002 = 0.0446766158073773533;
inline constexpr double gumbel_inv_095 = 2.97019524904216456;
inline constexpr double gumbel_an_10000 = 210.728584030161700;
inline constexpr double gumbel_bn_10000 = 3.57396868681377500;
inline constexpr double gumbel_beta_10000_005 = 0.0310549419101077852;
inline constexpr double gumbel_beta_1000_005 = 0.0948894883732956860;
inline constexpr double gumbel_beta_16_005 = 0.657158870699515341;
inline constexpr double all_tiny_estimate_1000 = 0.99699782944658742;
inline constexpr double normal_sf_1959964 = 0.0249999990964424;
inline constexpr double normal_isf_0025 = 1.95996398454005424;
inline constexpr double laplace_sf_1 = 0.18393972058572116;
inline constexpr double subbotin_sf_15_2 = 0.0401684430738682044;
inline constexpr double subbotin_sf_05_3 = 0.0698656750961573355;
inline constexpr double subbotin_sf_3_m07 = 0.764239681994540252;
inline constexpr double gamma_q_05_50 = 1.52397060483210521e-23;
inline constexpr double gamma_q_25_12 = 0.791474120594324666;
inline constexpr double gamma_p_7_3 = 0.0335085353088412069;

inline double normal_sf(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

inline double laplace_sf(double x) { return x >= 0 ? 0.5 * std::exp(-x) : 1.0 - 0.5 * std::exp(x); }

inline double delta(std::string_view kind, double t)
{
    if (kind == "linear")
        return t;
    if (kind == "constant")
        return 1.0;
    return std::sqrt(t * (1.0 - t));
}

// sup over the interior grid a + (b - a) k / points, k = 1..points-1, of
// f(F_n(t), t). F_n is advanced by a pointer sweep over the sorted sample.
template <typename F>
double grid_sup(std::span<const double> sorted, double a, double b, std::size_t points, F&& f)
{
    const double n = static_cast<double>(sorted.size());
    std::size_t below = 0;
    double best = -INFINITY;
    for (std::size_t k = 1; k < points; ++k)
    {
        const double t = a + (b - a) * static_cast<double>(k) / static_cast<double>(points);
        while (below < sorted.size() && sorted[below] <= t)
            ++below;
        const double value = f(static_cast<double>(below) / n, t);
        if (value > best)
            best = value;
    }
    return best;
}

} // namespace oracle

#endif // NULLPROP_TEST_ORACLES_HPP
