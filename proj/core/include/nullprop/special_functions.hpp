#ifndef NULLPROP_SPECIAL_FUNCTIONS_HPP
#define NULLPROP_SPECIAL_FUNCTIONS_HPP

namespace nullprop::special
{

// Regularized incomplete gamma functions for a > 0, x >= 0.
//
// The series for P is used when x < a + 1 and the Lentz continued fraction
// for Q otherwise, so each branch converges quickly and the complementary
// value is only formed where it does not cancel. Target accuracy is 1e-10
// relative (in practice a few ulps away from the switch point).

double gamma_p(double a, double x);
double gamma_q(double a, double x);

/// log Q(a, x); stays finite where Q underflows.
double log_gamma_q(double a, double x);

} // namespace nullprop::special

#endif // NULLPROP_SPECIAL_FUNCTIONS_HPP
