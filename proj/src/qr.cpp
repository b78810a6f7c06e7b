#include "synthrank/qr.hpp"

#include <cmath>
#include <limits>

#include "synthrank/parallel.hpp"

namespace synthrank {

namespace {

// Relative threshold on a diagonal entry of R before the column is
// declared dependent on its predecessors.
constexpr double kRankTolerance = 1e4 * std::numeric_limits<double>::epsilon();

double column_norm(const std::vector<double>& col, std::size_t from) {
    double ss = 0.0;
    for (std::size_t i = from; i < col.size(); ++i) ss += col[i] * col[i];
    return std::sqrt(ss);
}

}  // namespace

LeastSquaresSolution solve_least_squares(std::vector<std::vector<double>> columns,
                                         const std::vector<double>& y) {
    const std::size_t p = columns.size();
    const std::size_t n = y.size();
    if (p == 0) {
        throw ComputeError("least squares: design matrix has no columns");
    }
    for (const auto& col : columns) {
        if (col.size() != n) {
            throw ComputeError("least squares: column length does not match y");
        }
    }
    if (n < p) {
        throw ComputeError("least squares: " + std::to_string(n)
                           + " observations cannot identify " + std::to_string(p)
                           + " coefficients");
    }

    const auto original = columns;

    std::vector<double> original_norm(p);
    for (std::size_t j = 0; j < p; ++j) original_norm[j] = column_norm(columns[j], 0);

    std::vector<double> qty = y;
    std::vector<double> v(n);
    const bool big = n * p >= kParallelGrain;

    // Householder QR, reflecting one column at a time. The trailing-column
    // updates are independent of each other, so they may run in parallel;
    // each column is updated by one serial loop.
    for (std::size_t k = 0; k < p; ++k) {
        auto& ck = columns[k];
        const double norm = column_norm(ck, k);
        if (norm <= kRankTolerance * original_norm[k] || original_norm[k] == 0.0) {
            throw RankDeficientError(k, "design matrix is rank deficient at column "
                                            + std::to_string(k));
        }
        const double alpha = ck[k] > 0 ? -norm : norm;
        for (std::size_t i = k; i < n; ++i) v[i] = ck[i];
        v[k] -= alpha;
        double vtv = 0.0;
        for (std::size_t i = k; i < n; ++i) vtv += v[i] * v[i];
        ck[k] = alpha;
        for (std::size_t i = k + 1; i < n; ++i) ck[i] = 0.0;

        if (vtv == 0.0) continue;

        const double* vp = v.data();
#pragma omp parallel for schedule(static) if (big)
        for (std::size_t j = k + 1; j < p; ++j) {
            auto& cj = columns[j];
            double dot = 0.0;
            for (std::size_t i = k; i < n; ++i) dot += vp[i] * cj[i];
            const double f = 2.0 * dot / vtv;
            for (std::size_t i = k; i < n; ++i) cj[i] -= f * vp[i];
        }
        double dot = 0.0;
        for (std::size_t i = k; i < n; ++i) dot += vp[i] * qty[i];
        const double f = 2.0 * dot / vtv;
        for (std::size_t i = k; i < n; ++i) qty[i] -= f * vp[i];
    }

    // Back substitution: R b = Q^T y restricted to the top p rows.
    LeastSquaresSolution out;
    out.coefficients.assign(p, 0.0);
    for (std::size_t k = p; k-- > 0;) {
        double s = qty[k];
        for (std::size_t j = k + 1; j < p; ++j) s -= columns[j][k] * out.coefficients[j];
        out.coefficients[k] = s / columns[k][k];
    }

    // Rows of R^{-1} give the diagonal of (A^T A)^{-1} = R^{-1} R^{-T}.
    std::vector<std::vector<double>> rinv(p, std::vector<double>(p, 0.0));
    for (std::size_t c = 0; c < p; ++c) {
        std::vector<double> e(p, 0.0);
        e[c] = 1.0;
        for (std::size_t k = c + 1; k-- > 0;) {
            double s = e[k];
            for (std::size_t j = k + 1; j <= c; ++j) s -= columns[j][k] * rinv[j][c];
            rinv[k][c] = s / columns[k][k];
        }
    }
    out.xtx_inverse_diagonal.assign(p, 0.0);
    for (std::size_t j = 0; j < p; ++j) {
        double ss = 0.0;
        for (std::size_t l = j; l < p; ++l) ss += rinv[j][l] * rinv[j][l];
        out.xtx_inverse_diagonal[j] = ss;
    }

    out.fitted.assign(n, 0.0);
#pragma omp parallel for schedule(static) if (big)
    for (std::size_t i = 0; i < n; ++i) {
        double f = 0.0;
        for (std::size_t j = 0; j < p; ++j) f += out.coefficients[j] * original[j][i];
        out.fitted[i] = f;
    }
    out.residuals.assign(n, 0.0);
    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out.residuals[i] = y[i] - out.fitted[i];
        sse += out.residuals[i] * out.residuals[i];
    }
    out.sse = sse;
    return out;
}

}  // namespace synthrank
