#pragma once

#include <cstddef>
#include <vector>

#include "synthrank/error.hpp"

namespace synthrank {

/// Raised when a design-matrix column is (numerically) a linear combination
/// of the preceding ones.
class RankDeficientError : public ComputeError {
public:
    RankDeficientError(std::size_t column, const std::string& what)
        : ComputeError(what), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

struct LeastSquaresSolution {
    std::vector<double> coefficients;   // one per design column
    std::vector<double> fitted;
    std::vector<double> residuals;
    double sse = 0.0;
    /// Diagonal of (A^T A)^{-1}, obtained from the R factor; scaled by the
    /// residual variance these are squared standard errors.
    std::vector<double> xtx_inverse_diagonal;
};

/// Least squares via Householder QR of the design matrix itself (the
/// cross-product matrix is never formed or inverted). `columns` holds the
/// design column-major; all columns must have length `rows`.
LeastSquaresSolution solve_least_squares(std::vector<std::vector<double>> columns,
                                         const std::vector<double>& y);

}  // namespace synthrank
