#include "caloric/correction.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace caloric {

CorrectionSystem::CorrectionSystem(std::size_t spatial_dim, int degree_bound)
    : spatial_dim_(spatial_dim), degree_bound_(degree_bound) {
    if (spatial_dim < 1) throw std::invalid_argument("CorrectionSystem: spatial dimension must be >= 1");
    if (degree_bound < 0) throw std::invalid_argument("CorrectionSystem: degree bound must be >= 0");

    basis_ = monomials_up_to_height(spatial_dim, degree_bound);
    std::map<MultiIndex, std::size_t, GradedLexLess> index;
    for (std::size_t i = 0; i < basis_.size(); ++i) index.emplace(basis_[i], i);

    // Contiguous index ranges of constant caloric height.
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    for (std::size_t i = 0; i < basis_.size();) {
        const int h = basis_[i].caloric_height();
        std::size_t j = i;
        while (j < basis_.size() && basis_[j].caloric_height() == h) ++j;
        ranges.emplace_back(i, j);
        i = j;
    }

    const Polynomial w = Polynomial::w(spatial_dim);
    std::vector<std::vector<std::pair<std::size_t, BigInt>>> columns(basis_.size());
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        const Polynomial image = apply_heat(w * Polynomial::monomial(spatial_dim, basis_[j], 1));
        for (const auto& [alpha, c] : image.terms()) {
            auto it = index.find(alpha);
            if (it == index.end() || alpha.caloric_height() != basis_[j].caloric_height()) {
                // T must preserve caloric height; anything else is a bug.
                throw std::logic_error("CorrectionSystem: image term escapes the height block");
            }
            if (c.get_den() != 1) throw std::logic_error("CorrectionSystem: non-integer matrix entry");
            columns[j].emplace_back(it->second, BigInt(c.get_num()));
        }
    }

    blocks_.reserve(ranges.size());
    for (const auto& [b, e] : ranges) {
        const std::size_t dim = e - b;
        std::vector<std::vector<BigInt>> m(dim, std::vector<BigInt>(dim, BigInt(0)));
        for (std::size_t j = b; j < e; ++j) {
            for (const auto& [row, value] : columns[j]) m[row - b][j - b] = value;
        }
        blocks_.emplace_back(b, e, std::move(m));
        if (blocks_.back().lu.singular()) {
            throw std::logic_error(
                "CorrectionSystem: singular height block (N=" + std::to_string(spatial_dim) +
                ", height=" + std::to_string(basis_[b].caloric_height()) +
                "); the correction map is provably invertible, so this is an implementation bug");
        }
    }
}

Rational CorrectionSystem::matrix_entry(std::size_t i, std::size_t j) const {
    if (i >= basis_.size() || j >= basis_.size()) {
        throw std::out_of_range("CorrectionSystem::matrix_entry");
    }
    for (const auto& blk : blocks_) {
        if (i >= blk.begin && i < blk.end) {
            if (j < blk.begin || j >= blk.end) return Rational(0);
            return Rational(blk.matrix[i - blk.begin][j - blk.begin]);
        }
    }
    return Rational(0);
}

Rational CorrectionSystem::determinant() const {
    Rational det(1);
    for (const auto& blk : blocks_) det *= Rational(blk.lu.determinant());
    return det;
}

Polynomial CorrectionSystem::solve(const Polynomial& rhs) const {
    if (rhs.spatial_dimension() != spatial_dim_) {
        throw std::invalid_argument("CorrectionSystem::solve: dimension mismatch");
    }
    if (rhs.is_zero()) return Polynomial::zero(spatial_dim_);
    if (*rhs.caloric_degree() > degree_bound_) {
        throw std::invalid_argument("CorrectionSystem::solve: rhs degree exceeds the system bound");
    }

    Polynomial q(spatial_dim_);
    for (const auto& blk : blocks_) {
        // Assemble this height block of the rhs; skip blocks with no data
        // (the solution vanishes there by invertibility).
        std::vector<Rational> b(blk.end - blk.begin, Rational(0));
        bool any = false;
        for (std::size_t i = blk.begin; i < blk.end; ++i) {
            Rational c = rhs.coefficient(basis_[i]);
            if (c != 0) any = true;
            b[i - blk.begin] = std::move(c);
        }
        if (!any) continue;
        const std::vector<Rational> x = blk.lu.solve(std::move(b));
        for (std::size_t i = blk.begin; i < blk.end; ++i) {
            q.add_term(basis_[i], x[i - blk.begin]);
        }
    }
    return q;
}

CorrectionSystem build_correction_system(std::size_t spatial_dim, int degree_bound) {
    return CorrectionSystem(spatial_dim, degree_bound);
}

namespace {

Polynomial solve_correction_impl(const Polynomial& p, const CorrectionSystem* prebuilt) {
    const std::size_t n = p.spatial_dimension();
    const Polynomial rhs = -apply_heat(p);
    if (rhs.is_zero()) return Polynomial::zero(n);

    const Polynomial q = prebuilt ? prebuilt->solve(rhs)
                                  : CorrectionSystem(n, *rhs.caloric_degree()).solve(rhs);

    // The defining identity must hold exactly.
    if (!(apply_heat(Polynomial::w(n) * q) - rhs).is_zero()) {
        throw std::logic_error("solve_correction: residual check failed");
    }
    return q;
}

Polynomial caloric_extension_impl(const Polynomial& p, const CorrectionSystem* prebuilt) {
    const std::size_t n = p.spatial_dimension();
    const Polynomial u = Polynomial::w(n) * solve_correction_impl(p, prebuilt) + p;
    if (!apply_heat(u).is_zero()) {
        throw std::logic_error("caloric_extension: result is not caloric");
    }
    if (!substitute_paraboloid(u - p).is_zero()) {
        throw std::logic_error("caloric_extension: boundary values do not match");
    }
    return u;
}

}  // namespace

Polynomial solve_correction(const Polynomial& p) { return solve_correction_impl(p, nullptr); }

Polynomial caloric_extension(const Polynomial& p) { return caloric_extension_impl(p, nullptr); }

ExtensionSolver::ExtensionSolver(std::size_t spatial_dim, int max_rhs_degree)
    : system_(spatial_dim, max_rhs_degree), w_(Polynomial::w(spatial_dim)) {}

Polynomial ExtensionSolver::solve_correction(const Polynomial& p) const {
    return solve_correction_impl(p, &system_);
}

Polynomial ExtensionSolver::extend(const Polynomial& p) const {
    return caloric_extension_impl(p, &system_);
}

}  // namespace caloric
