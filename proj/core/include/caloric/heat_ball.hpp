#pragma once

#include <stdexcept>
#include <vector>

#include "caloric/point.hpp"
#include "caloric/representation.hpp"

namespace caloric {

/// Radius of the spatial cross-section of the heat ball Omega_r(z0) at
/// temporal depth s = t0 - t: R(s) = sqrt(2 N s ln(r/s)), 0 < s < r.
double heat_ball_section_radius(double s, double r, std::size_t spatial_dim);

struct QuadratureResolution {
    int depth_levels = 24;      // geometric refinement levels toward each end of (0, r)
    double grading = 0.15;      // geometric ratio between consecutive levels
    int depth_order = 14;       // Gauss-Legendre nodes per depth interval
    int radial_order = 12;      // nodes across each spatial cross-section
    int angular_order = 16;     // uniform angles (N = 2), azimuth (N = 3)
    int polar_order = 8;        // nodes in the polar direction (N = 3)

    double normalization_tolerance = 1e-8;
    int max_refinements = 3;

    /// A strictly finer rule; node counts grow monotonically with factor.
    QuadratureResolution refined(double factor = 1.5) const;
};

struct QuadratureError : std::runtime_error {
    double achieved;
    QuadratureError(const std::string& what, double achieved_)
        : std::runtime_error(what), achieved(achieved_) {}
};

/// Nodes and weights for integrating over a Pini-Watson ball. Weights are
/// plain volume weights; the Watson kernel factor is applied by mean_value.
class HeatBallQuadrature {
public:
    HeatBallQuadrature(SpaceTimePoint pole, double radius, QuadratureResolution res);

    const SpaceTimePoint& pole() const { return pole_; }
    double radius() const { return radius_; }
    const std::vector<SpaceTimePoint>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }
    /// Pole-relative displacements: offsets()[i] equals z0 - node_i computed
    /// without cancellation (its t component is the depth s_i > 0). The
    /// Watson factor and the defining inequality are evaluated on these.
    const std::vector<SpaceTimePoint>& offsets() const { return offsets_; }
    double normalization_error() const { return normalization_error_; }
    const QuadratureResolution& resolution() const { return res_; }

private:
    friend HeatBallQuadrature build_heat_ball_quadrature(const SpaceTimePoint&, double,
                                                         const QuadratureResolution&);
    SpaceTimePoint pole_;
    double radius_;
    QuadratureResolution res_;
    std::vector<SpaceTimePoint> nodes_;
    std::vector<SpaceTimePoint> offsets_;
    std::vector<double> weights_;
    double normalization_error_ = 0.0;
};

/// Builds the quadrature and verifies the normalization M_r(1) = 1,
/// refining up to res.max_refinements times; throws QuadratureError with
/// the achieved error when the tolerance cannot be met.
HeatBallQuadrature build_heat_ball_quadrature(const SpaceTimePoint& pole, double radius,
                                              const QuadratureResolution& res = {});

/// The heat-ball average M_r(u)(z0) =
/// (4 pi r)^{-N/2} sum_i w_i u(node_i) W(z0 - node_i), with Watson kernel
/// W(z) = |x|^2 / (4 t^2).
double mean_value(const Field& u, const HeatBallQuadrature& quad);

/// The same rule translated to another pole; reuses the quadrature's
/// offsets, so one build serves every pole at a fixed radius.
double mean_value_at(const Field& u, const HeatBallQuadrature& quad, const SpaceTimePoint& pole);

/// Node/weight dump for inspection: coordinates, depth, weight, Watson
/// factor, with the achieved normalization error in a header comment.
void write_quadrature_csv(const HeatBallQuadrature& quad, std::ostream& out);

}  // namespace caloric
