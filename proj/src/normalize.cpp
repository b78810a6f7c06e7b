#include "synthrank/normalize.hpp"

#include <cmath>

#include "synthrank/error.hpp"
#include "synthrank/parallel.hpp"

namespace synthrank {

namespace {

void normalize_into(std::span<const double> in, Direction direction,
                    double* out, std::size_t stride, bool& degenerate) {
    double lo = in[0];
    double hi = in[0];
    for (double v : in) {
        if (!std::isfinite(v)) {
            throw ComputeError("normalize_column: non-finite value "
                               + std::to_string(v));
        }
        if (v < lo) lo = v;
        if (v > hi) hi = v;
    }
    degenerate = (hi == lo);
    if (degenerate) {
        for (std::size_t i = 0; i < in.size(); ++i) out[i * stride] = 0.5;
        return;
    }
    const double range = hi - lo;
    if (direction == Direction::stimulant) {
        for (std::size_t i = 0; i < in.size(); ++i) out[i * stride] = (in[i] - lo) / range;
    } else {
        for (std::size_t i = 0; i < in.size(); ++i) out[i * stride] = (hi - in[i]) / range;
    }
}

}  // namespace

NormalizedColumn normalize_column(std::span<const double> values, Direction direction) {
    if (values.empty()) {
        throw ComputeError("normalize_column: empty column");
    }
    NormalizedColumn out;
    out.values.resize(values.size());
    normalize_into(values, direction, out.values.data(), 1, out.degenerate);
    return out;
}

NormalizedMatrix normalize_matrix(const CompleteDataset& d) {
    const std::size_t n = d.entity_count();
    const std::size_t m = d.variable_count();
    NormalizedMatrix out;
    out.entities = d.entities();
    out.variables = d.variables();
    out.values.resize(n * m);

    std::vector<char> degenerate(m, 0);
    std::vector<std::string> column_errors(m);
    const bool big = n * m >= kParallelGrain;

    // Exceptions must not escape the parallel region; collect and rethrow.
#pragma omp parallel for schedule(static) if (big)
    for (std::size_t j = 0; j < m; ++j) {
        try {
            const auto col = d.column(j);
            bool flag = false;
            normalize_into(col, d.variables()[j].direction, out.values.data() + j, m, flag);
            degenerate[j] = flag;
        } catch (const std::exception& e) {
            column_errors[j] = e.what();
        }
    }

    for (std::size_t j = 0; j < m; ++j) {
        if (!column_errors[j].empty()) {
            throw ComputeError("column \"" + d.variables()[j].id + "\": " + column_errors[j]);
        }
    }

    for (std::size_t j = 0; j < m; ++j) {
        if (degenerate[j]) out.degenerate_columns.push_back(d.variables()[j].id);
    }
    return out;
}

}  // namespace synthrank
