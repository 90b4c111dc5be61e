#pragma once

#include <functional>
#include <vector>

#include "caloric/point.hpp"

namespace caloric {

/// Caloric bowl B(z0, r) = { |x - x0|^2 < t - t0 < r^2 } of bottom z0 and
/// opening r. Dirichlet data lives on the normal boundary, the paraboloid
/// cap { |x - x0|^2 = t - t0 <= r^2 }.
struct CaloricBowl {
    SpaceTimePoint bottom;
    double opening = 0.0;

    CaloricBowl(SpaceTimePoint bottom_, double opening_);

    std::size_t spatial_dimension() const { return bottom.spatial_dimension(); }

    /// B(z0, 2r); the regularization step solves on this.
    CaloricBowl doubled() const { return CaloricBowl(bottom, 2.0 * opening); }

    bool contains(const SpaceTimePoint& z) const;
    /// B together with its top face (the closure minus the normal boundary).
    bool in_hat(const SpaceTimePoint& z) const;

    /// Lifts a spatial point of the closed ball |x - x0| <= r onto the
    /// normal boundary: (x, t0 + |x - x0|^2). Rejects x outside the ball.
    SpaceTimePoint normal_boundary_point(const std::vector<double>& x) const;
};

/// Dirichlet data on the normal boundary of a bowl, carried in the graph
/// parametrization: the value attached to the boundary point above x is
/// (*this)(x).
class BoundaryData {
public:
    using BallFunction = std::function<double(const std::vector<double>&)>;

    /// Restriction of a space-time function to the normal boundary.
    static BoundaryData restrict_to_boundary(const std::function<double(const SpaceTimePoint&)>& f,
                                             const CaloricBowl& bowl);
    static BoundaryData from_ball_function(BallFunction f);
    /// Piecewise-linear samples over sorted 1-d nodes (spatial dimension one).
    static BoundaryData from_samples(std::vector<double> nodes, std::vector<double> values);

    double operator()(const std::vector<double>& x) const { return f_(x); }

private:
    explicit BoundaryData(BallFunction f) : f_(std::move(f)) {}
    BallFunction f_;
};

}  // namespace caloric
