#pragma once

#include <utility>
#include <vector>

namespace caloric {

/// Gauss-Legendre nodes and weights on [-1, 1], exact for polynomials of
/// degree <= 2n - 1. Computed by Newton iteration on the Legendre
/// recurrence and cached per order.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

/// Nodes and weights mapped to [a, b].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre_on(int n, double a, double b);

}  // namespace caloric
