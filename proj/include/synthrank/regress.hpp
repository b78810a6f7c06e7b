#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "synthrank/error.hpp"

namespace synthrank {

/// Full OLS result: point estimates, inference, and fit statistics.
/// Per-predictor vectors are aligned with `predictors`; the intercept has
/// its own fields. Immutable once produced by fit_ols.
struct RegressionFit {
    std::string dependent = "y";
    std::vector<std::string> predictors;
    std::size_t n_used = 0;
    bool has_intercept = true;

    double intercept = 0.0;
    double se_intercept = 0.0;
    double t_intercept = 0.0;
    double p_intercept = 1.0;

    std::vector<double> coefficients;
    std::vector<double> std_errors;
    std::vector<double> standardized;               // b*: slope in sd-of-y units
    std::vector<double> std_errors_standardized;
    std::vector<double> t_stats;
    std::vector<double> p_values;

    std::vector<double> fitted;
    std::vector<double> residuals;

    double r = 0.0;
    double r2 = 0.0;
    double adjusted_r2 = 0.0;
    double f = 0.0;
    double p_f = 1.0;
    double std_error_estimate = 0.0;  // sqrt(SSE / df_resid)

    std::size_t df_model() const { return predictors.size(); }
    std::size_t df_resid() const {
        return n_used - predictors.size() - (has_intercept ? 1 : 0);
    }
};

/// Fits y on the given predictor columns by Householder QR (the normal
/// equations are never formed). Populates the whole RegressionFit,
/// standardized coefficients and p-values included. When the dependent is
/// constant, R^2 is reported as 0 and the coefficient t/p are NaN.
/// Throws for rank-deficient designs (naming the offending column) and for
/// too few observations.
RegressionFit fit_ols(std::span<const std::vector<double>> predictor_columns,
                      std::span<const double> y,
                      bool include_intercept = true,
                      std::vector<std::string> predictor_names = {},
                      std::string dependent_name = "y");

struct StandardizedCoefficients {
    std::vector<double> b_star;
    std::vector<double> se_b_star;
};

/// b*_j = b_j * s_xj / s_y with sample (n-1) standard deviations, standard
/// errors scaled the same way. Errors out when a predictor or the dependent
/// has zero variance.
StandardizedCoefficients standardized_coefficients(
    const RegressionFit& fit,
    std::span<const std::vector<double>> predictor_columns,
    std::span<const double> y);

struct Inference {
    std::vector<double> t_stats;   // intercept first when present
    std::vector<double> p_values;
};

/// t_j = b_j / se_j and two-sided Student-t tails at df_resid. Errors out
/// on a zero standard error.
Inference coefficient_inference(const RegressionFit& fit);

struct FitStatistics {
    double r = 0.0;
    double r2 = 0.0;
    double adjusted_r2 = 0.0;
    double f = 0.0;
    double p_f = 1.0;
};

/// R^2 = 1 - SSE/SST and companions. A perfect fit reports F = +infinity
/// with p = 0; a constant dependent (SST = 0) is an error here.
FitStatistics goodness_of_fit(const RegressionFit& fit);

/// Sum of squared successive residual differences over the residual sum of
/// squares, in the given order. Always lands in [0, 4]. Needs >= 2
/// residuals, not all zero.
double durbin_watson(std::span<const double> residuals);

/// Lag-1 Pearson correlation between residuals[0..n-2] and residuals[1..n-1].
/// Needs >= 3 residuals and nonzero variance in both slices.
double serial_correlation(std::span<const double> residuals);

/// (theoretical normal quantile, ordered residual) pairs using Blom
/// plotting positions (i - 3/8) / (n + 1/4), ascending. Needs >= 3 points.
std::vector<std::pair<double, double>> normal_probability_plot(
    std::span<const double> residuals);

/// Predictor ids with p < alpha, in predictor order; the intercept is
/// never included.
std::vector<std::string> significant_predictors(const RegressionFit& fit, double alpha);

struct SimpleRegressionReport {
    double slope = 0.0;
    double intercept = 0.0;
    double residual_std_error = 0.0;
    std::string equation;  // "y = <slope>·x + <intercept> ± <s>"
};

/// One-predictor fit with intercept, presented as an equation.
SimpleRegressionReport simple_regression_report(std::span<const double> x,
                                                std::span<const double> y,
                                                std::string dependent_name = "y",
                                                std::string predictor_name = "x");

}  // namespace synthrank
