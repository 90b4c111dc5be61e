#pragma once

#include <random>

#include "caloric/polynomial.hpp"

namespace caloric::testing {

/// Deterministic random polynomial with caloric degree <= max_height and
/// small rational coefficients. May return the zero polynomial.
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t spatial_dim, int max_height,
                                    double term_density = 0.4) {
    std::uniform_real_distribution<double> pick(0.0, 1.0);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    Polynomial p(spatial_dim);
    for (const MultiIndex& alpha : monomials_up_to_height(spatial_dim, max_height)) {
        if (pick(rng) > term_density) continue;
        const int n = num(rng);
        if (n == 0) continue;
        Rational c(n, den(rng));
        c.canonicalize();
        p.add_term(alpha, c);
    }
    return p;
}

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace caloric::testing
