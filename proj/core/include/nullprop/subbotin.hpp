#ifndef NULLPROP_SUBBOTIN_HPP
#define NULLPROP_SUBBOTIN_HPP

#include "nullprop/random.hpp"

namespace nullprop
{

// Standardized Subbotin (generalized Gaussian) law with density proportional
// to exp(-|x|^kappa / kappa). kappa = 2 is the standard normal, kappa = 1 the
// Laplace law. All functions throw std::domain_error for kappa <= 0.

/// P(X > x). For x >= 0 this is Q(1/kappa, x^kappa/kappa) / 2.
double subbotin_sf(double kappa, double x);

/// log P(X > x), accurate far into the upper tail.
double subbotin_log_sf(double kappa, double x);

/// The x with subbotin_sf(kappa, x) = p, for p in (0,1).
double subbotin_isf(double kappa, double p);

/// Exact sampler: |X| = (kappa G)^(1/kappa), G ~ Gamma(1/kappa), random sign.
double sample_subbotin(Stream& stream, double kappa);

} // namespace nullprop

#endif // NULLPROP_SUBBOTIN_HPP
