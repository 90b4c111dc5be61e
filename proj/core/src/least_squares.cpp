#include "caloric/least_squares.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace caloric {

LeastSquaresResult solve_least_squares(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t m = a.size();
    if (m == 0) throw std::invalid_argument("solve_least_squares: empty system");
    const std::size_t n = a[0].size();
    if (n == 0 || m < n) throw std::invalid_argument("solve_least_squares: need rows >= columns >= 1");
    if (b.size() != m) throw std::invalid_argument("solve_least_squares: rhs size mismatch");
    for (const auto& row : a) {
        if (row.size() != n) throw std::invalid_argument("solve_least_squares: ragged matrix");
    }

    std::vector<double> scale(n, 1.0);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += a[i][j] * a[i][j];
        s = std::sqrt(s);
        if (s > 0.0) {
            scale[j] = s;
            for (std::size_t i = 0; i < m; ++i) a[i][j] /= s;
        }
    }

    // Householder triangularization, applied to b as we go.
    for (std::size_t k = 0; k < n; ++k) {
        double norm = 0.0;
        for (std::size_t i = k; i < m; ++i) norm += a[i][k] * a[i][k];
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;  // rank deficiency; caught by the condition estimate
        if (a[k][k] > 0.0) norm = -norm;
        for (std::size_t i = k; i < m; ++i) a[i][k] /= norm;
        a[k][k] -= 1.0;
        for (std::size_t j = k + 1; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t i = k; i < m; ++i) dot += a[i][k] * a[i][j];
            dot /= a[k][k];
            for (std::size_t i = k; i < m; ++i) a[i][j] += dot * a[i][k];
        }
        double dot = 0.0;
        for (std::size_t i = k; i < m; ++i) dot += a[i][k] * b[i];
        dot /= a[k][k];
        for (std::size_t i = k; i < m; ++i) b[i] += dot * a[i][k];
        a[k][k] = norm;  // R diagonal
    }

    double rmax = 0.0, rmin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
        const double d = std::abs(a[j][j]);
        rmax = std::max(rmax, d);
        rmin = std::min(rmin, d);
    }

    LeastSquaresResult out;
    out.condition_estimate = (rmin == 0.0) ? std::numeric_limits<double>::infinity() : rmax / rmin;
    out.coefficients.assign(n, 0.0);
    for (std::size_t jj = n; jj-- > 0;) {
        double acc = b[jj];
        for (std::size_t j = jj + 1; j < n; ++j) acc -= a[jj][j] * out.coefficients[j];
        out.coefficients[jj] = (a[jj][jj] == 0.0) ? 0.0 : acc / a[jj][jj];
    }
    for (std::size_t j = 0; j < n; ++j) out.coefficients[j] /= scale[j];
    return out;
}

}  // namespace caloric
