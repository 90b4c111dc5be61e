#include "caloric/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace caloric {

namespace {

void require_same_dim(const Polynomial& a, const Polynomial& b) {
    if (a.spatial_dimension() != b.spatial_dimension()) {
        throw std::invalid_argument("Polynomial: spatial dimension mismatch");
    }
}

}  // namespace

Polynomial::Polynomial(std::size_t spatial_dim) : spatial_dim_(spatial_dim) {
    if (spatial_dim < 1) throw std::invalid_argument("Polynomial: spatial dimension must be >= 1");
}

Polynomial Polynomial::constant(std::size_t spatial_dim, const Rational& c) {
    Polynomial p(spatial_dim);
    p.add_term(MultiIndex(spatial_dim), c);
    return p;
}

Polynomial Polynomial::monomial(std::size_t spatial_dim, const MultiIndex& alpha, const Rational& c) {
    if (alpha.spatial_dimension() != spatial_dim) {
        throw std::invalid_argument("Polynomial::monomial: multi-index dimension mismatch");
    }
    Polynomial p(spatial_dim);
    p.add_term(alpha, c);
    return p;
}

Polynomial Polynomial::variable_x(std::size_t spatial_dim, std::size_t i) {
    if (i >= spatial_dim) throw std::invalid_argument("Polynomial::variable_x: index out of range");
    return monomial(spatial_dim, MultiIndex(spatial_dim).with_spatial(i, 1), 1);
}

Polynomial Polynomial::variable_t(std::size_t spatial_dim) {
    return monomial(spatial_dim, MultiIndex(spatial_dim).with_temporal(1), 1);
}

Polynomial Polynomial::w(std::size_t spatial_dim) {
    Polynomial p = variable_t(spatial_dim);
    for (std::size_t i = 0; i < spatial_dim; ++i) {
        p.add_term(MultiIndex(spatial_dim).with_spatial(i, 2), -1);
    }
    return p;
}

Rational Polynomial::coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> Polynomial::caloric_degree() const {
    if (terms_.empty()) return std::nullopt;
    // Map is graded: the last term has maximal caloric height.
    return terms_.rbegin()->first.caloric_height();
}

void Polynomial::add_term(const MultiIndex& alpha, const Rational& c) {
    if (alpha.spatial_dimension() != spatial_dim_) {
        throw std::invalid_argument("Polynomial::add_term: multi-index dimension mismatch");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial p(spatial_dim_);
    for (const auto& [alpha, c] : terms_) p.terms_.emplace(alpha, -c);
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    require_same_dim(*this, rhs);
    for (const auto& [alpha, c] : rhs.terms_) add_term(alpha, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    require_same_dim(*this, rhs);
    for (const auto& [alpha, c] : rhs.terms_) add_term(alpha, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, coef] : terms_) coef *= c;
    return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
}

Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    lhs -= rhs;
    return lhs;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    require_same_dim(lhs, rhs);
    const std::size_t n = lhs.spatial_dimension();
    Polynomial prod(n);
    for (const auto& [a, ca] : lhs.terms()) {
        for (const auto& [b, cb] : rhs.terms()) {
            std::vector<std::uint32_t> e(n + 1);
            for (std::size_t i = 0; i <= n; ++i) e[i] = a.exponents()[i] + b.exponents()[i];
            prod.add_term(MultiIndex::from_exponents(std::move(e)), ca * cb);
        }
    }
    return prod;
}

Polynomial operator*(const Rational& c, Polynomial p) {
    p *= c;
    return p;
}

Polynomial operator*(Polynomial p, const Rational& c) {
    p *= c;
    return p;
}

Polynomial Polynomial::derivative_x(std::size_t i) const {
    if (i >= spatial_dim_) throw std::invalid_argument("derivative_x: index out of range");
    Polynomial d(spatial_dim_);
    for (const auto& [alpha, c] : terms_) {
        const std::uint32_t a = alpha.spatial(i);
        if (a == 0) continue;
        d.add_term(alpha.with_spatial(i, a - 1), c * Rational(a));
    }
    return d;
}

Polynomial Polynomial::derivative_t() const {
    Polynomial d(spatial_dim_);
    for (const auto& [alpha, c] : terms_) {
        const std::uint32_t k = alpha.temporal();
        if (k == 0) continue;
        d.add_term(alpha.with_temporal(k - 1), c * Rational(k));
    }
    return d;
}

Rational Polynomial::evaluate_exact(std::span<const Rational> point) const {
    if (point.size() != spatial_dim_ + 1) {
        throw std::invalid_argument("evaluate_exact: point dimension mismatch");
    }
    Rational sum = 0;
    for (const auto& [alpha, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i <= spatial_dim_; ++i) {
            for (std::uint32_t k = 0; k < alpha.exponents()[i]; ++k) term *= point[i];
        }
        sum += term;
    }
    return sum;
}

double Polynomial::evaluate(const SpaceTimePoint& z) const {
    if (z.spatial_dimension() != spatial_dim_) {
        throw std::invalid_argument("evaluate: point dimension mismatch");
    }
    double sum = 0.0;
    for (const auto& [alpha, c] : terms_) {
        double term = c.get_d();
        for (std::size_t i = 0; i < spatial_dim_; ++i) {
            for (std::uint32_t k = 0; k < alpha.spatial(i); ++k) term *= z.x[i];
        }
        for (std::uint32_t k = 0; k < alpha.temporal(); ++k) term *= z.t;
        sum += term;
    }
    return sum;
}

Polynomial Polynomial::translate(std::span<const Rational> shift) const {
    if (shift.size() != spatial_dim_ + 1) {
        throw std::invalid_argument("translate: shift dimension mismatch");
    }
    // Expand prod_i (v_i + s_i)^{a_i} term by term with binomial coefficients.
    Polynomial out(spatial_dim_);
    for (const auto& [alpha, c] : terms_) {
        std::vector<std::vector<Rational>> factor(spatial_dim_ + 1);
        for (std::size_t i = 0; i <= spatial_dim_; ++i) {
            const std::uint32_t a = alpha.exponents()[i];
            factor[i].resize(a + 1);
            // factor[i][j] = C(a, j) * s_i^{a-j}, coefficient of v_i^j.
            Rational s_pow = 1;
            for (std::uint32_t j = a;; --j) {
                BigInt binom;
                mpz_bin_uiui(binom.get_mpz_t(), a, j);
                factor[i][j] = Rational(binom) * s_pow;
                if (j == 0) break;
                s_pow *= shift[i];
            }
        }
        // Tensor the per-variable expansions.
        std::vector<std::uint32_t> e(spatial_dim_ + 1, 0);
        auto rec = [&](auto&& self, std::size_t i, const Rational& acc) -> void {
            if (i > spatial_dim_) {
                out.add_term(MultiIndex::from_exponents(e), acc);
                return;
            }
            for (std::uint32_t j = 0; j < factor[i].size(); ++j) {
                if (factor[i][j] == 0) continue;
                e[i] = j;
                self(self, i + 1, acc * factor[i][j]);
            }
            e[i] = 0;
        };
        rec(rec, 0, c);
    }
    return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    return spatial_dim_ == rhs.spatial_dim_ && terms_ == rhs.terms_;
}

Polynomial apply_heat(const Polynomial& p) {
    const std::size_t n = p.spatial_dimension();
    Polynomial out(n);
    for (std::size_t i = 0; i < n; ++i) out += p.derivative_x(i).derivative_x(i);
    out -= p.derivative_t();
    return out;
}

Polynomial apply_adjoint_heat(const Polynomial& p) {
    const std::size_t n = p.spatial_dimension();
    Polynomial out(n);
    for (std::size_t i = 0; i < n; ++i) out += p.derivative_x(i).derivative_x(i);
    out += p.derivative_t();
    return out;
}

Polynomial substitute_paraboloid(const Polynomial& p) {
    const std::size_t n = p.spatial_dimension();
    // |x|^2 as a polynomial, powered on demand.
    Polynomial x_sq(n);
    for (std::size_t i = 0; i < n; ++i) x_sq.add_term(MultiIndex(n).with_spatial(i, 2), 1);
    std::vector<Polynomial> pow = {Polynomial::constant(n, 1)};

    Polynomial out(n);
    for (const auto& [alpha, c] : p.terms()) {
        const std::uint32_t k = alpha.temporal();
        while (pow.size() <= k) pow.push_back(pow.back() * x_sq);
        out += Polynomial::monomial(n, alpha.with_temporal(0), c) * pow[k];
    }
    return out;
}

}  // namespace caloric
