#pragma once

#include <cstddef>
#include <vector>

#include "caloric/rational.hpp"

namespace caloric {

/// Dense integer matrix factored by fraction-free (Bareiss) elimination.
///
/// The factorization is computed once; solves replay the elimination on the
/// right-hand side with exact rational arithmetic, so many systems with the
/// same matrix share one elimination.
class FractionFreeLU {
public:
    /// Factors a square integer matrix. Row swaps are recorded; a zero pivot
    /// column marks the matrix singular (determinant 0).
    explicit FractionFreeLU(std::vector<std::vector<BigInt>> matrix);

    std::size_t size() const { return n_; }
    bool singular() const { return singular_; }
    const BigInt& determinant() const { return det_; }

    /// Solves A x = b exactly. Throws std::domain_error if singular.
    std::vector<Rational> solve(std::vector<Rational> b) const;

private:
    std::size_t n_;
    std::vector<std::vector<BigInt>> m_;   // upper part final, lower part holds elimination history
    std::vector<BigInt> pivots_;           // pivots_[k] = m[k][k] after step k
    std::vector<std::pair<std::size_t, std::size_t>> swaps_;
    BigInt det_ = 0;
    bool singular_ = false;
};

/// Plain rational Gaussian-elimination determinant; the independent
/// cross-check for the Bareiss path.
Rational determinant_gauss(std::vector<std::vector<Rational>> m);

}  // namespace caloric
