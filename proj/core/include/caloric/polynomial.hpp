#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "caloric/multi_index.hpp"
#include "caloric/point.hpp"
#include "caloric/rational.hpp"

namespace caloric {

/// Sparse polynomial in (x_1, ..., x_N, t) with exact rational coefficients.
///
/// Terms are kept in graded-lex order of their multi-indices and zero
/// coefficients are never stored, so equality of representations is equality
/// of polynomials.
class Polynomial {
public:
    using TermMap = std::map<MultiIndex, Rational, GradedLexLess>;

    explicit Polynomial(std::size_t spatial_dim);

    static Polynomial zero(std::size_t spatial_dim) { return Polynomial(spatial_dim); }
    static Polynomial constant(std::size_t spatial_dim, const Rational& c);
    static Polynomial monomial(std::size_t spatial_dim, const MultiIndex& alpha, const Rational& c);
    /// x_i (i is zero-based).
    static Polynomial variable_x(std::size_t spatial_dim, std::size_t i);
    static Polynomial variable_t(std::size_t spatial_dim);
    /// w(x, t) = t - |x|^2, the polynomial vanishing on the paraboloid.
    static Polynomial w(std::size_t spatial_dim);

    std::size_t spatial_dimension() const { return spatial_dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of the given multi-index (zero if absent).
    Rational coefficient(const MultiIndex& alpha) const;

    /// Max caloric height over stored terms; nullopt for the zero polynomial
    /// (the "minus infinity" sentinel).
    std::optional<int> caloric_degree() const;

    /// Adds c * z^alpha, dropping the term if the sum cancels.
    void add_term(const MultiIndex& alpha, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    /// Partial derivative in the i-th spatial variable (zero-based).
    Polynomial derivative_x(std::size_t i) const;
    Polynomial derivative_t() const;

    /// Exact evaluation at a rational point (x_1, ..., x_N, t).
    Rational evaluate_exact(std::span<const Rational> point) const;
    /// Floating evaluation at z = (x, t).
    double evaluate(const SpaceTimePoint& z) const;

    /// Exact substitution x_i <- x_i + shift_i, t <- t + shift_{N}.
    Polynomial translate(std::span<const Rational> shift) const;

    bool operator==(const Polynomial& rhs) const;

private:
    std::size_t spatial_dim_;
    TermMap terms_;
};

Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
Polynomial operator*(const Rational& c, Polynomial p);
Polynomial operator*(Polynomial p, const Rational& c);

/// Heat operator H = Laplacian - d/dt, exactly.
Polynomial apply_heat(const Polynomial& p);

/// Adjoint heat operator H* = Laplacian + d/dt, exactly.
Polynomial apply_adjoint_heat(const Polynomial& p);

/// Substitutes t <- |x|^2; the result is zero iff p vanishes on the
/// paraboloid iff w divides p.
Polynomial substitute_paraboloid(const Polynomial& p);

}  // namespace caloric
