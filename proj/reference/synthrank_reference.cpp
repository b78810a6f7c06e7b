#include "synthrank_reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "synthrank/error.hpp"
#include "synthrank/statfn.hpp"

namespace synthrank::reference {

NormalizedMatrix normalize_matrix(const CompleteDataset& d) {
    const std::size_t n = d.entity_count();
    const std::size_t m = d.variable_count();
    NormalizedMatrix out;
    out.entities = d.entities();
    out.variables = d.variables();
    out.values.resize(n * m);
    for (std::size_t j = 0; j < m; ++j) {
        double lo = d.value(0, j);
        double hi = lo;
        for (std::size_t i = 1; i < n; ++i) {
            lo = std::min(lo, d.value(i, j));
            hi = std::max(hi, d.value(i, j));
        }
        if (hi == lo) {
            out.degenerate_columns.push_back(d.variables()[j].id);
            for (std::size_t i = 0; i < n; ++i) out.values[i * m + j] = 0.5;
            continue;
        }
        const bool destim = d.variables()[j].direction == Direction::destimulant;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = d.value(i, j);
            out.values[i * m + j] = destim ? (hi - x) / (hi - lo) : (x - lo) / (hi - lo);
        }
    }
    return out;
}

std::vector<SyntheticScore> score_all(const NormalizedMatrix& nm) {
    const std::size_t n = nm.entity_count();
    const std::size_t m = nm.variable_count();
    std::vector<SyntheticScore> out;
    out.reserve(n);
    std::vector<double> sorted(m);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = nm.row(i);
        sorted.assign(row.begin(), row.end());
        std::sort(sorted.begin(), sorted.end());
        const double me = m % 2 == 0 ? (sorted[m / 2 - 1] + sorted[m / 2]) / 2.0
                                     : sorted[m / 2];
        // mean and spread accumulate in row order, like the parallel kernel
        double mean = 0.0;
        for (double v : row) mean += v;
        mean /= static_cast<double>(m);
        double ss = 0.0;
        for (double v : row) ss += (v - mean) * (v - mean);
        const double sd = std::sqrt(ss / static_cast<double>(m));
        const double w = me * (1.0 - sd);
        out.push_back({nm.entities[i], me, sd, w, w >= 1.0});
    }
    return out;
}

OlsOracleResult fit_ols_normal_equations(
    std::span<const std::vector<double>> predictor_columns,
    std::span<const double> y,
    bool include_intercept) {
    const std::size_t k = predictor_columns.size();
    const std::size_t n = y.size();
    const std::size_t p = k + (include_intercept ? 1 : 0);
    if (k == 0 || n < p + 1) {
        throw ComputeError("ols oracle: bad problem size");
    }

    // Design matrix in long double, columns scaled to unit norm so the
    // cross-product matrix stays well conditioned; coefficients are
    // unscaled afterwards.
    std::vector<std::vector<long double>> a(p, std::vector<long double>(n));
    if (include_intercept) {
        std::fill(a[0].begin(), a[0].end(), 1.0L);
    }
    for (std::size_t j = 0; j < k; ++j) {
        const auto& col = predictor_columns[j];
        if (col.size() != n) throw ComputeError("ols oracle: ragged design");
        auto& dst = a[j + (include_intercept ? 1 : 0)];
        for (std::size_t i = 0; i < n; ++i) dst[i] = col[i];
    }
    std::vector<long double> scale(p, 1.0L);
    for (std::size_t j = 0; j < p; ++j) {
        long double ss = 0.0L;
        for (long double v : a[j]) ss += v * v;
        if (ss == 0.0L) throw ComputeError("ols oracle: zero column");
        scale[j] = std::sqrt(ss);
        for (auto& v : a[j]) v /= scale[j];
    }

    std::vector<std::vector<long double>> ata(p, std::vector<long double>(p));
    std::vector<long double> aty(p);
    for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t c = r; c < p; ++c) {
            long double s = 0.0L;
            for (std::size_t i = 0; i < n; ++i) s += a[r][i] * a[c][i];
            ata[r][c] = ata[c][r] = s;
        }
        long double s = 0.0L;
        for (std::size_t i = 0; i < n; ++i) s += a[r][i] * static_cast<long double>(y[i]);
        aty[r] = s;
    }

    // Gauss-Jordan with partial pivoting, producing the inverse alongside.
    std::vector<std::vector<long double>> m(p, std::vector<long double>(2 * p, 0.0L));
    for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t c = 0; c < p; ++c) m[r][c] = ata[r][c];
        m[r][p + r] = 1.0L;
    }
    for (std::size_t c = 0; c < p; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < p; ++r) {
            if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
        }
        if (m[piv][c] == 0.0L) {
            throw ComputeError("ols oracle: singular cross-product matrix");
        }
        std::swap(m[c], m[piv]);
        const long double d = m[c][c];
        for (auto& v : m[c]) v /= d;
        for (std::size_t r = 0; r < p; ++r) {
            if (r == c || m[r][c] == 0.0L) continue;
            const long double f = m[r][c];
            for (std::size_t cc = 0; cc < 2 * p; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }

    std::vector<long double> beta(p, 0.0L);
    std::vector<long double> diag(p, 0.0L);
    for (std::size_t r = 0; r < p; ++r) {
        long double s = 0.0L;
        for (std::size_t c = 0; c < p; ++c) s += m[r][p + c] * aty[c];
        beta[r] = s;
        diag[r] = m[r][p + r];
    }

    std::vector<long double> fitted(n, 0.0L);
    for (std::size_t i = 0; i < n; ++i) {
        long double s = 0.0L;
        for (std::size_t j = 0; j < p; ++j) s += a[j][i] * beta[j];
        fitted[i] = s;
    }
    long double sse = 0.0L;
    long double ybar = 0.0L;
    for (std::size_t i = 0; i < n; ++i) ybar += y[i];
    ybar /= n;
    long double sst = 0.0L;
    OlsOracleResult out;
    out.fitted.resize(n);
    out.residuals.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const long double e = static_cast<long double>(y[i]) - fitted[i];
        sse += e * e;
        sst += (static_cast<long double>(y[i]) - ybar) * (static_cast<long double>(y[i]) - ybar);
        out.fitted[i] = static_cast<double>(fitted[i]);
        out.residuals[i] = static_cast<double>(e);
    }

    const std::size_t df = n - p;
    const long double s2 = sse / df;
    out.residual_std_error = static_cast<double>(std::sqrt(s2));

    for (std::size_t j = 0; j < p; ++j) {
        const long double b = beta[j] / scale[j];
        const long double se = std::sqrt(s2 * diag[j]) / scale[j];
        out.coefficients.push_back(static_cast<double>(b));
        out.std_errors.push_back(static_cast<double>(se));
        const long double t = b / se;
        out.t_stats.push_back(static_cast<double>(t));
        out.p_values.push_back(2.0 * (1.0 - statfn::t_cdf(std::fabs(static_cast<double>(t)),
                                                          static_cast<int>(df))));
    }

    if (sst > 0.0L) {
        const long double r2 = 1.0L - sse / sst;
        out.r2 = static_cast<double>(r2);
        out.adjusted_r2 = static_cast<double>(1.0L - (1.0L - r2) * (n - 1) / df);
        const long double f = (r2 / k) / ((1.0L - r2) / df);
        out.f = static_cast<double>(f);
        out.p_f = 1.0 - statfn::f_cdf(out.f, static_cast<int>(k), static_cast<int>(df));
    }

    long double sy2 = sst / (n - 1);
    const std::size_t first = include_intercept ? 1 : 0;
    for (std::size_t j = 0; j < k; ++j) {
        long double mx = 0.0L;
        for (double v : predictor_columns[j]) mx += v;
        mx /= n;
        long double sx2 = 0.0L;
        for (double v : predictor_columns[j]) sx2 += (v - mx) * (v - mx);
        sx2 /= (n - 1);
        if (sy2 > 0.0L && sx2 > 0.0L) {
            const long double ratio = std::sqrt(sx2 / sy2);
            out.standardized.push_back(
                static_cast<double>(beta[first + j] / scale[first + j] * ratio));
            out.standardized_se.push_back(static_cast<double>(
                std::sqrt(s2 * diag[first + j]) / scale[first + j] * ratio));
        } else {
            out.standardized.push_back(std::numeric_limits<double>::quiet_NaN());
            out.standardized_se.push_back(std::numeric_limits<double>::quiet_NaN());
        }
    }
    return out;
}

}  // namespace synthrank::reference
