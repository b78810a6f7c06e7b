#pragma once

namespace synthrank::statfn {

// Distribution functions backing the regression inference. All routines
// work in 80-bit extended precision internally and return probabilities
// clamped to [0, 1].

/// Natural log of the gamma function. Requires x > 0.
double log_gamma(double x);

/// Regularized incomplete beta function I_x(a, b). Requires a, b > 0 and
/// x in [0, 1].
double reg_inc_beta(double a, double b, double x);

/// Student-t CDF with integer degrees of freedom (df >= 1).
double t_cdf(double t, int df);

/// F distribution CDF, f >= 0, with d1, d2 >= 1.
double f_cdf(double f, int d1, int d2);

/// Standard normal CDF.
double normal_cdf(double z);

/// Standard normal quantile function. Requires 0 < p < 1.
double inv_normal_cdf(double p);

}  // namespace synthrank::statfn
