#ifndef NULLPROP_REGIME_HPP
#define NULLPROP_REGIME_HPP

#include "nullprop/bounding.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace nullprop
{

/// Asymptotic behaviour of lambda_hat / lambda when lambda ~ n^-gamma and the
/// alternative p-value quantiles scale like n^-r.
enum class Regime
{
    full_detection, // ratio -> 1 in probability
    no_detection,   // ratio -> 0 in probability
    boundary,       // exactly on the critical line
    not_covered     // no asymptotic statement available
};

std::string_view to_string(Regime regime);

struct RegimeQuery
{
    Exponent nu;       // regular-variation index of delta, in [0,1]
    double gamma = 0;  // sparsity exponent, in [0,1)
    double r = 0.5;    // signal-strength exponent, in (0,1)

    void validate() const;
};

/// Detection regime of the estimator for a bounding function in Q_nu.
///
///  nu <= 1/2, gamma < 1/2           full detection
///  0 < nu <= 1/2, gamma >= 1/2      critical line r = (gamma - 1/2) / nu
///  nu = 0, gamma >= 1/2             no detection
///  1/2 < nu <= 1, 1-nu < gamma < 1/2  no detection
///  nu = 1, gamma >= 1/2             critical line r = gamma
///  anything else                    not covered
Regime regime_classify(const RegimeQuery& query);

/// Detection regime of the Bonferroni count F_n(alpha/n): full detection
/// exactly on the half-plane r > 1. Accepts any r > 0.
Regime fwer_regime(double gamma, double r);

struct RegimeCell
{
    Exponent nu;
    double gamma;
    double r;
    Regime regime;
    Regime fwer;
};

/// Row-major (gamma outer, r inner) grid: gamma_i = i / size for i < size and
/// r_j = r_max (j + 1) / (size + 1) for j < size.
std::vector<RegimeCell> regime_grid(std::span<const Exponent> nus, int size, double r_max = 1.0);

} // namespace nullprop

#endif // NULLPROP_REGIME_HPP
