#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "synthrank/dataset.hpp"
#include "synthrank/normalize.hpp"
#include "synthrank/regress.hpp"
#include "synthrank/synthesis.hpp"
#include "synthrank_reference.hpp"

// Compares the parallel kernels against the serial reference on synthetic
// data: wall time, speedup, and the largest numeric deviation.

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

synthrank::CompleteDataset make_dataset(std::size_t rows, std::size_t cols,
                                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> value(-100.0, 100.0);
    std::vector<std::string> entities(rows);
    for (std::size_t i = 0; i < rows; ++i) entities[i] = "e" + std::to_string(i);
    std::vector<synthrank::VariableSpec> variables(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        variables[j] = {"v" + std::to_string(j), "", "",
                        j % 3 == 0 ? synthrank::Direction::destimulant
                                   : synthrank::Direction::stimulant};
    }
    std::vector<double> values(rows * cols);
    for (auto& v : values) v = value(rng);
    return synthrank::CompleteDataset(std::move(entities), std::move(variables),
                                      std::move(values), {});
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::fabs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t rows = 200000;
    std::size_t cols = 48;
    std::size_t ols_predictors = 24;
    int repeats = 3;

    CLI::App app{"synthrank kernel benchmark: parallel vs serial reference"};
    app.add_option("-n,--rows", rows, "Synthetic entity count");
    app.add_option("-k,--cols", cols, "Synthetic variable count");
    app.add_option("-p,--predictors", ols_predictors, "Predictors for the OLS benchmark");
    app.add_option("-r,--repeats", repeats, "Timing repetitions (best run counts)");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both sides run serially\n");
#endif
    std::printf("dataset: %zu x %zu, OLS predictors: %zu\n\n", rows, cols, ols_predictors);

    const auto data = make_dataset(rows, cols, 20260810);

    auto best = [&](auto&& fn) {
        double best_ms = 1e300;
        for (int i = 0; i < repeats; ++i) {
            const auto start = Clock::now();
            fn();
            best_ms = std::min(best_ms, ms_since(start));
        }
        return best_ms;
    };

    std::printf("%-22s %12s %12s %10s %12s\n", "kernel", "parallel ms", "serial ms",
                "speedup", "max |diff|");

    synthrank::NormalizedMatrix nm_par, nm_ser;
    const double t_norm_par = best([&] { nm_par = synthrank::normalize_matrix(data); });
    const double t_norm_ser = best([&] { nm_ser = synthrank::reference::normalize_matrix(data); });
    std::printf("%-22s %12.2f %12.2f %9.2fx %12.3g\n", "normalize_matrix", t_norm_par,
                t_norm_ser, t_norm_ser / t_norm_par, max_abs_diff(nm_par.values, nm_ser.values));

    std::vector<synthrank::SyntheticScore> sc_par, sc_ser;
    const double t_score_par = best([&] { sc_par = synthrank::score_all(nm_par); });
    const double t_score_ser = best([&] { sc_ser = synthrank::reference::score_all(nm_ser); });
    double score_diff = 0.0;
    for (std::size_t i = 0; i < sc_par.size(); ++i) {
        score_diff = std::max(score_diff, std::fabs(sc_par[i].w - sc_ser[i].w));
    }
    std::printf("%-22s %12.2f %12.2f %9.2fx %12.3g\n", "score_all", t_score_par, t_score_ser,
                t_score_ser / t_score_par, score_diff);

    // OLS: y from a random linear model over the first p synthetic columns.
    std::vector<std::vector<double>> columns(ols_predictors);
    for (std::size_t j = 0; j < ols_predictors; ++j) columns[j] = data.column(j % cols);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::vector<double> beta(ols_predictors);
    for (auto& b : beta) b = coef(rng);
    std::normal_distribution<double> noise(0.0, 5.0);
    std::vector<double> y(rows, 1.0);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < ols_predictors; ++j) y[i] += beta[j] * columns[j][i];
        y[i] += noise(rng);
    }

    synthrank::RegressionFit fit;
    synthrank::reference::OlsOracleResult oracle;
    const double t_ols_par = best([&] { fit = synthrank::fit_ols(columns, y); });
    const double t_ols_ser = best(
        [&] { oracle = synthrank::reference::fit_ols_normal_equations(columns, y); });
    double coef_diff = std::fabs(fit.intercept - oracle.coefficients[0]);
    for (std::size_t j = 0; j < ols_predictors; ++j) {
        coef_diff = std::max(coef_diff,
                             std::fabs(fit.coefficients[j] - oracle.coefficients[j + 1]));
    }
    std::printf("%-22s %12.2f %12.2f %9.2fx %12.3g\n", "fit_ols (QR vs NE)", t_ols_par,
                t_ols_ser, t_ols_ser / t_ols_par, coef_diff);
    return 0;
}
