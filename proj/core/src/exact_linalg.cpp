#include "caloric/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace caloric {

FractionFreeLU::FractionFreeLU(std::vector<std::vector<BigInt>> matrix) : m_(std::move(matrix)) {
    n_ = m_.size();
    for (const auto& row : m_) {
        if (row.size() != n_) throw std::invalid_argument("FractionFreeLU: matrix must be square");
    }
    if (n_ == 0) {
        det_ = 1;
        return;
    }
    pivots_.assign(n_, BigInt(1));
    int sign = 1;

    BigInt prev(1);
    for (std::size_t k = 0; k < n_; ++k) {
        // Pivot: first row with a nonzero entry in column k.
        std::size_t piv = k;
        while (piv < n_ && m_[piv][k] == 0) ++piv;
        if (piv == n_) {
            singular_ = true;
            det_ = 0;
            return;
        }
        if (piv != k) {
            std::swap(m_[piv], m_[k]);
            swaps_.emplace_back(k, piv);
            sign = -sign;
        }
        pivots_[k] = m_[k][k];
        if (k + 1 == n_) break;
        for (std::size_t i = k + 1; i < n_; ++i) {
            for (std::size_t j = k + 1; j < n_; ++j) {
                BigInt num = m_[k][k] * m_[i][j] - m_[i][k] * m_[k][j];
                mpz_divexact(m_[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            // m_[i][k] is kept: it drives the rhs replay in solve().
        }
        prev = m_[k][k];
    }
    det_ = (sign > 0) ? m_[n_ - 1][n_ - 1] : BigInt(-m_[n_ - 1][n_ - 1]);
}

std::vector<Rational> FractionFreeLU::solve(std::vector<Rational> b) const {
    if (singular_) throw std::domain_error("FractionFreeLU::solve: singular matrix");
    if (b.size() != n_) throw std::invalid_argument("FractionFreeLU::solve: size mismatch");

    for (const auto& [i, j] : swaps_) std::swap(b[i], b[j]);

    // Replay the fraction-free elimination on b.
    Rational prev(1);
    for (std::size_t k = 0; k + 1 < n_; ++k) {
        const Rational pk(pivots_[k]);
        for (std::size_t i = k + 1; i < n_; ++i) {
            b[i] = (pk * b[i] - Rational(m_[i][k]) * b[k]) / prev;
        }
        prev = pk;
    }

    // Back substitution against the upper-triangular part.
    std::vector<Rational> x(n_);
    for (std::size_t ii = n_; ii-- > 0;) {
        Rational acc = b[ii];
        for (std::size_t j = ii + 1; j < n_; ++j) acc -= Rational(m_[ii][j]) * x[j];
        x[ii] = acc / Rational(m_[ii][ii]);
    }
    return x;
}

Rational determinant_gauss(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("determinant_gauss: matrix must be square");
    }
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            const Rational f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

}  // namespace caloric
