#pragma once

#include <vector>

namespace caloric {

struct LeastSquaresResult {
    std::vector<double> coefficients;
    /// max |R_jj| / min |R_jj| of the column-scaled factor; a cheap
    /// conditioning proxy, not a rigorous condition number.
    double condition_estimate = 0.0;
};

/// Householder QR least squares with column scaling. `a` is row-major with
/// rows >= columns and full column rank expected; rank deficiency surfaces
/// as a huge condition estimate.
LeastSquaresResult solve_least_squares(std::vector<std::vector<double>> a, std::vector<double> b);

}  // namespace caloric
