#include "synthrank/statfn.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "synthrank/error.hpp"

namespace synthrank::statfn {

namespace {

constexpr long double kHalfLog2Pi = 0.91893853320467274178032973640561763986L;

// Stirling series coefficients B_{2n} / (2n (2n-1)).
constexpr long double kStirling[] = {
    1.0L / 12,
    -1.0L / 360,
    1.0L / 1260,
    -1.0L / 1680,
    1.0L / 1188,
    -691.0L / 360360,
    1.0L / 156,
    -3617.0L / 122400,
};

// Stirling expansion above this point keeps the truncation error below
// ~2e-18; smaller arguments are shifted up with the recurrence.
constexpr long double kStirlingCutoff = 10.0L;

long double log_gamma_ld(long double x) {
    long double shift = 0.0L;
    while (x < kStirlingCutoff) {
        shift += std::log(x);
        x += 1.0L;
    }
    const long double inv = 1.0L / x;
    const long double inv2 = inv * inv;
    long double series = 0.0L;
    long double power = inv;
    for (long double c : kStirling) {
        series += c * power;
        power *= inv2;
    }
    return (x - 0.5L) * std::log(x) - x + kHalfLog2Pi + series - shift;
}

// Continued fraction for the incomplete beta function, modified Lentz.
long double beta_cf(long double a, long double b, long double x) {
    constexpr long double eps = 1e-20L;
    constexpr long double tiny = 1e-4000L;
    const long double qab = a + b;
    const long double qap = a + 1.0L;
    const long double qam = a - 1.0L;
    long double c = 1.0L;
    long double d = 1.0L - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0L / d;
    long double h = d;
    for (int m = 1; m <= 400; ++m) {
        const long double m2 = 2.0L * m;
        long double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0L + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0L + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0L / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0L + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0L + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0L / d;
        const long double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0L) < eps) break;
    }
    return h;
}

long double reg_inc_beta_ld(long double a, long double b, long double x) {
    if (x <= 0.0L) return 0.0L;
    if (x >= 1.0L) return 1.0L;
    const long double log_front = a * std::log(x) + b * std::log1p(-x)
        - (log_gamma_ld(a) + log_gamma_ld(b) - log_gamma_ld(a + b));
    if (x < (a + 1.0L) / (a + b + 2.0L)) {
        return std::exp(log_front) * beta_cf(a, b, x) / a;
    }
    return 1.0L - std::exp(log_front) * beta_cf(b, a, 1.0L - x) / b;
}

long double normal_cdf_ld(long double z) {
    constexpr long double inv_sqrt2 = 0.70710678118654752440084436210484903928L;
    return 0.5L * std::erfc(-z * inv_sqrt2);
}

double clamp_probability(long double p) {
    if (p < 0.0L) return 0.0;
    if (p > 1.0L) return 1.0;
    return static_cast<double>(p);
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw ComputeError("log_gamma: argument must be a positive real, got "
                           + std::to_string(x));
    }
    if (x == 1.0 || x == 2.0) return 0.0;
    return static_cast<double>(log_gamma_ld(static_cast<long double>(x)));
}

double reg_inc_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw ComputeError("reg_inc_beta: shape parameters must be positive");
    }
    if (!(x >= 0.0 && x <= 1.0)) {
        throw ComputeError("reg_inc_beta: x must lie in [0, 1], got "
                           + std::to_string(x));
    }
    return clamp_probability(reg_inc_beta_ld(a, b, x));
}

double t_cdf(double t, int df) {
    if (df < 1) {
        throw ComputeError("t_cdf: degrees of freedom must be >= 1, got "
                           + std::to_string(df));
    }
    if (!std::isfinite(t)) return t > 0 ? 1.0 : 0.0;
    const long double tl = t;
    const long double v = df;
    const long double x = v / (tl * tl + v);
    const long double tail = reg_inc_beta_ld(v / 2.0L, 0.5L, x) / 2.0L;
    return clamp_probability(t >= 0.0 ? 1.0L - tail : tail);
}

double f_cdf(double f, int d1, int d2) {
    if (d1 < 1 || d2 < 1) {
        throw ComputeError("f_cdf: degrees of freedom must be >= 1");
    }
    if (!(f >= 0.0)) {
        throw ComputeError("f_cdf: statistic must be >= 0, got " + std::to_string(f));
    }
    if (std::isinf(f)) return 1.0;
    const long double fl = f;
    const long double x = d1 * fl / (d1 * fl + d2);
    return clamp_probability(reg_inc_beta_ld(d1 / 2.0L, d2 / 2.0L, x));
}

double normal_cdf(double z) {
    if (!std::isfinite(z)) return z > 0 ? 1.0 : 0.0;
    return clamp_probability(normal_cdf_ld(z));
}

double inv_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw ComputeError("inv_normal_cdf: probability must lie strictly in (0, 1), got "
                           + std::to_string(p));
    }
    // Acklam's rational approximation, then one Halley step against the
    // extended-precision CDF.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00, 2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;
    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5])
            / ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q
            / (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5])
            / ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    constexpr long double sqrt_2pi = 2.50662827463100050241576528481104525301L;
    const long double xl = x;
    const long double err = normal_cdf_ld(xl) - static_cast<long double>(p);
    const long double u = err * sqrt_2pi * std::exp(xl * xl / 2.0L);
    return static_cast<double>(xl - u / (1.0L + xl * u / 2.0L));
}

}  // namespace synthrank::statfn
