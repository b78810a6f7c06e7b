#include "synthrank/regress.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "synthrank/format.hpp"
#include "synthrank/qr.hpp"
#include "synthrank/statfn.hpp"

namespace synthrank {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double sample_std(std::span<const double> v) {
    if (v.size() < 2) return 0.0;
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

double two_sided_p(double t, std::size_t df) {
    if (std::isnan(t)) return kNaN;
    return 2.0 * (1.0 - statfn::t_cdf(std::fabs(t), static_cast<int>(df)));
}

}  // namespace

RegressionFit fit_ols(std::span<const std::vector<double>> predictor_columns,
                      std::span<const double> y,
                      bool include_intercept,
                      std::vector<std::string> predictor_names,
                      std::string dependent_name) {
    const std::size_t k = predictor_columns.size();
    const std::size_t n = y.size();
    if (k == 0) {
        throw ComputeError("fit_ols: at least one predictor is required");
    }
    if (predictor_names.empty()) {
        for (std::size_t j = 0; j < k; ++j) predictor_names.push_back("x" + std::to_string(j + 1));
    }
    if (predictor_names.size() != k) {
        throw ComputeError("fit_ols: predictor name count does not match columns");
    }
    for (const auto& col : predictor_columns) {
        if (col.size() != n) {
            throw ComputeError("fit_ols: predictor column length does not match y");
        }
    }
    const std::size_t p = k + (include_intercept ? 1 : 0);
    if (n < p + 1) {
        throw ComputeError("fit_ols: " + std::to_string(n) + " observations are too few for "
                           + std::to_string(p) + " coefficients (need at least "
                           + std::to_string(p + 1) + ")");
    }

    std::vector<std::vector<double>> design;
    design.reserve(p);
    if (include_intercept) design.emplace_back(n, 1.0);
    for (const auto& col : predictor_columns) design.push_back(col);

    LeastSquaresSolution sol;
    try {
        sol = solve_least_squares(std::move(design), std::vector<double>(y.begin(), y.end()));
    } catch (const RankDeficientError& e) {
        const std::size_t c = e.column();
        const std::string name = (include_intercept && c == 0)
            ? std::string("intercept")
            : predictor_names[c - (include_intercept ? 1 : 0)];
        throw ComputeError("fit_ols: design matrix is rank deficient; column \""
                           + name + "\" is a linear combination of the preceding ones");
    }

    RegressionFit fit;
    fit.dependent = std::move(dependent_name);
    fit.predictors = std::move(predictor_names);
    fit.n_used = n;
    fit.has_intercept = include_intercept;
    fit.fitted = std::move(sol.fitted);
    fit.residuals = std::move(sol.residuals);

    const std::size_t df = n - p;
    const double s2 = sol.sse / static_cast<double>(df);
    fit.std_error_estimate = std::sqrt(s2);

    auto coefficient_at = [&](std::size_t idx) { return sol.coefficients[idx]; };
    auto se_at = [&](std::size_t idx) {
        return std::sqrt(s2 * sol.xtx_inverse_diagonal[idx]);
    };

    std::size_t first = 0;
    if (include_intercept) {
        fit.intercept = coefficient_at(0);
        fit.se_intercept = se_at(0);
        fit.t_intercept = fit.se_intercept > 0 ? fit.intercept / fit.se_intercept : kNaN;
        fit.p_intercept = two_sided_p(fit.t_intercept, df);
        first = 1;
    }
    for (std::size_t j = 0; j < k; ++j) {
        fit.coefficients.push_back(coefficient_at(first + j));
        fit.std_errors.push_back(se_at(first + j));
        const double t = fit.std_errors.back() > 0
            ? fit.coefficients.back() / fit.std_errors.back() : kNaN;
        fit.t_stats.push_back(t);
        fit.p_values.push_back(two_sided_p(t, df));
    }

    // Goodness of fit. A constant dependent is reported as R^2 = 0 rather
    // than an error, so pipelines survive degenerate inputs.
    double ybar = 0.0;
    for (double v : y) ybar += v;
    ybar /= static_cast<double>(n);
    double sst = 0.0;
    for (double v : y) sst += (v - ybar) * (v - ybar);
    if (sst > 0.0) {
        fit.r2 = std::clamp(1.0 - sol.sse / sst, 0.0, 1.0);
        fit.r = std::sqrt(fit.r2);
        fit.adjusted_r2 = 1.0 - (1.0 - fit.r2) * static_cast<double>(n - 1)
            / static_cast<double>(df);
        if (fit.r2 == 1.0) {
            fit.f = std::numeric_limits<double>::infinity();
            fit.p_f = 0.0;
        } else {
            fit.f = (fit.r2 / static_cast<double>(k))
                / ((1.0 - fit.r2) / static_cast<double>(df));
            fit.p_f = 1.0 - statfn::f_cdf(fit.f, static_cast<int>(k), static_cast<int>(df));
        }
    } else {
        fit.r2 = fit.r = fit.adjusted_r2 = 0.0;
        fit.f = 0.0;
        fit.p_f = 1.0;
    }

    // Standardized coefficients; NaN when a standard deviation degenerates.
    const double sy = sample_std(y);
    for (std::size_t j = 0; j < k; ++j) {
        const double sx = sample_std(predictor_columns[j]);
        if (sy > 0.0 && sx > 0.0) {
            fit.standardized.push_back(fit.coefficients[j] * sx / sy);
            fit.std_errors_standardized.push_back(fit.std_errors[j] * sx / sy);
        } else {
            fit.standardized.push_back(kNaN);
            fit.std_errors_standardized.push_back(kNaN);
        }
    }
    return fit;
}

StandardizedCoefficients standardized_coefficients(
    const RegressionFit& fit,
    std::span<const std::vector<double>> predictor_columns,
    std::span<const double> y) {
    if (predictor_columns.size() != fit.predictors.size() || y.size() != fit.n_used) {
        throw ComputeError("standardized_coefficients: data does not match the fit");
    }
    const double sy = sample_std(y);
    if (sy <= 0.0) {
        throw ComputeError("standardized_coefficients: dependent variable has zero variance");
    }
    StandardizedCoefficients out;
    for (std::size_t j = 0; j < predictor_columns.size(); ++j) {
        const double sx = sample_std(predictor_columns[j]);
        if (sx <= 0.0) {
            throw ComputeError("standardized_coefficients: predictor \""
                               + fit.predictors[j] + "\" has zero variance");
        }
        out.b_star.push_back(fit.coefficients[j] * sx / sy);
        out.se_b_star.push_back(fit.std_errors[j] * sx / sy);
    }
    return out;
}

Inference coefficient_inference(const RegressionFit& fit) {
    if (fit.df_resid() < 1) {
        throw ComputeError("coefficient_inference: no residual degrees of freedom");
    }
    Inference out;
    auto push = [&](double b, double se, const std::string& name) {
        if (se == 0.0) {
            throw ComputeError("coefficient_inference: zero standard error for \""
                               + name + "\"");
        }
        const double t = b / se;
        out.t_stats.push_back(t);
        out.p_values.push_back(two_sided_p(t, fit.df_resid()));
    };
    if (fit.has_intercept) push(fit.intercept, fit.se_intercept, "intercept");
    for (std::size_t j = 0; j < fit.predictors.size(); ++j) {
        push(fit.coefficients[j], fit.std_errors[j], fit.predictors[j]);
    }
    return out;
}

FitStatistics goodness_of_fit(const RegressionFit& fit) {
    const std::size_t n = fit.n_used;
    const std::size_t k = fit.df_model();
    double sse = 0.0;
    double ybar = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sse += fit.residuals[i] * fit.residuals[i];
        ybar += fit.fitted[i] + fit.residuals[i];
    }
    ybar /= static_cast<double>(n);
    double sst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = fit.fitted[i] + fit.residuals[i] - ybar;
        sst += d * d;
    }
    if (sst <= 0.0) {
        throw ComputeError("goodness_of_fit: dependent variable constant (SST = 0)");
    }
    FitStatistics out;
    out.r2 = std::clamp(1.0 - sse / sst, 0.0, 1.0);
    out.r = std::sqrt(out.r2);
    const double df = static_cast<double>(fit.df_resid());
    out.adjusted_r2 = 1.0 - (1.0 - out.r2) * static_cast<double>(n - 1) / df;
    if (out.r2 == 1.0) {
        out.f = std::numeric_limits<double>::infinity();
        out.p_f = 0.0;
    } else {
        out.f = (out.r2 / static_cast<double>(k)) / ((1.0 - out.r2) / df);
        out.p_f = 1.0 - statfn::f_cdf(out.f, static_cast<int>(k),
                                      static_cast<int>(fit.df_resid()));
    }
    return out;
}

double durbin_watson(std::span<const double> residuals) {
    if (residuals.size() < 2) {
        throw ComputeError("durbin_watson: needs at least 2 residuals");
    }
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < residuals.size(); ++i) {
        den += residuals[i] * residuals[i];
        if (i > 0) {
            const double d = residuals[i] - residuals[i - 1];
            num += d * d;
        }
    }
    if (den == 0.0) {
        throw ComputeError("durbin_watson: all residuals are zero");
    }
    return num / den;
}

double serial_correlation(std::span<const double> residuals) {
    const std::size_t n = residuals.size();
    if (n < 3) {
        throw ComputeError("serial_correlation: needs at least 3 residuals");
    }
    const std::size_t m = n - 1;
    double ma = 0.0;
    double mb = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        ma += residuals[i];
        mb += residuals[i + 1];
    }
    ma /= static_cast<double>(m);
    mb /= static_cast<double>(m);
    double cov = 0.0;
    double va = 0.0;
    double vb = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double da = residuals[i] - ma;
        const double db = residuals[i + 1] - mb;
        cov += da * db;
        va += da * da;
        vb += db * db;
    }
    if (va == 0.0 || vb == 0.0) {
        throw ComputeError("serial_correlation: a lagged slice has zero variance");
    }
    return std::clamp(cov / std::sqrt(va * vb), -1.0, 1.0);
}

std::vector<std::pair<double, double>> normal_probability_plot(
    std::span<const double> residuals) {
    const std::size_t n = residuals.size();
    if (n < 3) {
        throw ComputeError("normal_probability_plot: needs at least 3 residuals");
    }
    std::vector<double> sorted(residuals.begin(), residuals.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<double, double>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double position = (static_cast<double>(i + 1) - 0.375)
            / (static_cast<double>(n) + 0.25);
        out.emplace_back(statfn::inv_normal_cdf(position), sorted[i]);
    }
    return out;
}

std::vector<std::string> significant_predictors(const RegressionFit& fit, double alpha) {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < fit.predictors.size(); ++j) {
        if (fit.p_values[j] < alpha) out.push_back(fit.predictors[j]);
    }
    return out;
}

SimpleRegressionReport simple_regression_report(std::span<const double> x,
                                                std::span<const double> y,
                                                std::string dependent_name,
                                                std::string predictor_name) {
    std::vector<std::vector<double>> cols{std::vector<double>(x.begin(), x.end())};
    const auto fit = fit_ols(cols, y, true, {predictor_name}, dependent_name);

    SimpleRegressionReport out;
    out.slope = fit.coefficients[0];
    out.intercept = fit.intercept;
    out.residual_std_error = fit.std_error_estimate;

    // Equation display: 6 significant digits, with float fuzz below
    // 1e-12 of the problem scale shown as 0.
    const double scale = std::max({1.0, std::fabs(out.slope), std::fabs(out.intercept),
                                   out.residual_std_error});
    auto display = [&](double v) {
        if (std::fabs(v) <= 1e-12 * scale) v = 0.0;
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%.6g", v);
        return std::string(buf);
    };
    out.equation = fit.dependent + " = " + display(out.slope) + "·" + predictor_name
        + " + " + display(out.intercept) + " ± " + display(out.residual_std_error);
    return out;
}

}  // namespace synthrank
