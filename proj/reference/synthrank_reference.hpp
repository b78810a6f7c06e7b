#pragma once

#include <span>
#include <vector>

#include "synthrank/dataset.hpp"
#include "synthrank/normalize.hpp"
#include "synthrank/synthesis.hpp"

// Plain serial implementations kept apart from the main library. The tests
// check the parallel kernels against these, and the benchmark compares
// their speed. The regression oracle solves the normal equations in 80-bit
// arithmetic, deliberately a different algorithm (and precision) than the
// QR path it cross-checks.
namespace synthrank::reference {

NormalizedMatrix normalize_matrix(const CompleteDataset& d);

std::vector<SyntheticScore> score_all(const NormalizedMatrix& nm);

struct OlsOracleResult {
    std::vector<double> coefficients;  // intercept first when included
    std::vector<double> std_errors;
    std::vector<double> t_stats;
    std::vector<double> p_values;
    std::vector<double> standardized;     // per predictor
    std::vector<double> standardized_se;  // per predictor
    std::vector<double> fitted;
    std::vector<double> residuals;
    double r2 = 0.0;
    double adjusted_r2 = 0.0;
    double f = 0.0;
    double p_f = 1.0;
    double residual_std_error = 0.0;
};

/// Brute-force least squares: forms X^T X (column-equilibrated) and solves
/// by Gauss-Jordan elimination, everything in long double.
OlsOracleResult fit_ols_normal_equations(
    std::span<const std::vector<double>> predictor_columns,
    std::span<const double> y,
    bool include_intercept = true);

}  // namespace synthrank::reference
