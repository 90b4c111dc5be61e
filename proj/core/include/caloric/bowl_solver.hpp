#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "caloric/bowl.hpp"
#include "caloric/polynomial.hpp"

namespace caloric {

struct FitOptions {
    /// Fitting nodes per axis; 0 derives 2 (degree + 1) from the degree.
    int nodes_per_axis = 0;
    /// Residual check set density relative to the fitting nodes.
    int check_density = 4;
    /// Near-rational coefficients are snapped when within this tolerance
    /// (scaled by coefficient size); exact fits then stay exact.
    double snap_tolerance = 1e-9;
    std::uint64_t snap_max_denominator = 1000000;
    /// Beyond this condition estimate the fit falls back to a lower degree.
    double condition_limit = 1e12;
};

struct BoundaryFit {
    /// Spatial polynomial in the centered variable y = x - x0.
    Polynomial polynomial;
    /// Max |p(y) - phi(x0 + y)| over the dense check set.
    double sup_residual = 0.0;
    double condition = 0.0;
    /// Degree actually used (lower than requested after a conditioning
    /// fallback).
    int degree = 0;

    BoundaryFit() : polynomial(1) {}
};

/// Least-squares polynomial fit of boundary data over the spatial ball, in
/// the monomial basis on tensor Chebyshev nodes. The residual is measured
/// on a denser node set including the rim and is non-increasing in the
/// degree for a fixed node set.
BoundaryFit fit_boundary_polynomial(const BoundaryData& phi, const CaloricBowl& bowl, int degree,
                                    const FitOptions& options = {});

/// Centered fitting offsets the least-squares fit uses: a tensor Chebyshev
/// grid scaled to the ball of the given radius, filtered to it.
std::vector<std::vector<double>> boundary_fit_offsets(std::size_t spatial_dim, double radius,
                                                      int per_axis);

/// Spatial monomials (temporal exponent zero) of total degree <= degree,
/// in graded-lex order; the fitting basis.
std::vector<MultiIndex> spatial_monomials(std::size_t spatial_dim, int degree);

struct BowlSolveOptions {
    /// Escalate the degree until the certificate meets this tolerance.
    std::optional<double> target_tolerance;
    /// Solve at exactly this degree instead of escalating.
    std::optional<int> fixed_degree;
    int max_degree = 14;
    /// The certificate inflates the sampled boundary residual by this
    /// factor to cover the gap between the sample sup and the true sup.
    double safety_factor = 1.25;
    FitOptions fit;
};

/// A certified caloric solve on a bowl: u is exactly caloric, and by the
/// maximum principle the interior error against the exact solution is
/// bounded by the boundary residual, estimated by certified_error.
struct BowlSolution {
    Polynomial u;
    double certified_error = 0.0;
    int degree = 0;
    bool tolerance_met = true;
    double condition = 0.0;
    /// (x, signed residual) over the dense boundary check set.
    std::vector<std::pair<std::vector<double>, double>> boundary_residuals;

    BowlSolution() : u(1) {}
};

BowlSolution solve_bowl(const CaloricBowl& bowl, const BoundaryData& phi,
                        const BowlSolveOptions& options = {});

/// Deterministic interior probe points, spread through the bowl.
std::vector<SpaceTimePoint> bowl_interior_samples(const CaloricBowl& bowl, std::size_t count);

struct HfOptions {
    /// Lipschitz constants for the inf-convolution regularization, in
    /// increasing order.
    std::vector<double> lipschitz_schedule = {1, 2, 4, 8, 16, 32, 64, 128, 256};
    /// Sample count for the inf-convolution minimization (per axis).
    int regularization_nodes = 257;
    BowlSolveOptions solve;
};

struct HfStage {
    double lipschitz = 0.0;
    BowlSolution solution;
    std::vector<double> probe_values;
};

/// Monotone approximation of the solution operator extended to bounded-above
/// lower semicontinuous data: each stage solves with the continuous
/// inf-convolution regularization phi_k(y) = inf_w { f(w) + k dist(w, y) },
/// where dist is the caloric norm between the lifted boundary points.
/// The stage solutions increase toward the extension as k grows.
std::vector<HfStage> approximate_h_f(const CaloricBowl& bowl, const BoundaryData& f,
                                     const std::vector<SpaceTimePoint>& probes,
                                     const HfOptions& options = {});

}  // namespace caloric
