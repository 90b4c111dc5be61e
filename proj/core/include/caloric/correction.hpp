#pragma once

#include <cstddef>
#include <vector>

#include "caloric/exact_linalg.hpp"
#include "caloric/polynomial.hpp"

namespace caloric {

/// The linear map T(q) = H(w q) restricted to the space of polynomials with
/// caloric degree <= degree_bound, in the graded monomial basis.
///
/// T preserves caloric height, so in the graded basis the matrix is block
/// diagonal with one block per height; each block is factored once at
/// construction and reused across solves. Construction fails if any block is
/// singular, which would indicate an implementation bug (the map is provably
/// invertible).
class CorrectionSystem {
public:
    CorrectionSystem(std::size_t spatial_dim, int degree_bound);

    std::size_t spatial_dimension() const { return spatial_dim_; }
    int degree_bound() const { return degree_bound_; }
    const std::vector<MultiIndex>& basis() const { return basis_; }
    std::size_t dimension() const { return basis_.size(); }

    /// Entry (i, j): coefficient of basis[i] in T(basis[j]).
    Rational matrix_entry(std::size_t i, std::size_t j) const;

    /// Exact determinant of the full matrix (product of block determinants).
    Rational determinant() const;

    /// Solves T q = rhs exactly; rhs must have caloric degree <= degree_bound.
    Polynomial solve(const Polynomial& rhs) const;

private:
    struct Block {
        std::size_t begin = 0;  // index range [begin, end) into the basis
        std::size_t end = 0;
        std::vector<std::vector<BigInt>> matrix;
        FractionFreeLU lu;
        Block(std::size_t b, std::size_t e, std::vector<std::vector<BigInt>> m)
            : begin(b), end(e), matrix(m), lu(std::move(m)) {}
    };

    std::size_t spatial_dim_;
    int degree_bound_;
    std::vector<MultiIndex> basis_;
    std::vector<Block> blocks_;
};

CorrectionSystem build_correction_system(std::size_t spatial_dim, int degree_bound);

/// The unique q with H(w q) = -H p, via an exact linear solve on the
/// correction system for the caloric degree of -H p. The residual
/// H(w q) + H p is verified to vanish identically before returning.
Polynomial solve_correction(const Polynomial& p);

/// The unique caloric polynomial equal to p on the paraboloid t = |x|^2:
/// u = w q + p with q = solve_correction(p). Both H u = 0 and the boundary
/// match are verified exactly.
Polynomial caloric_extension(const Polynomial& p);

/// Amortizes correction-system construction across many extensions with a
/// bounded right-hand-side degree.
class ExtensionSolver {
public:
    /// max_rhs_degree bounds the caloric degree of -H p (i.e. degree of p
    /// minus 2) across all later calls.
    ExtensionSolver(std::size_t spatial_dim, int max_rhs_degree);

    Polynomial solve_correction(const Polynomial& p) const;
    Polynomial extend(const Polynomial& p) const;

    const CorrectionSystem& system() const { return system_; }

private:
    CorrectionSystem system_;
    Polynomial w_;
};

}  // namespace caloric
