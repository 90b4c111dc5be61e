#pragma once

#include <vector>

#include "caloric/point.hpp"

namespace caloric {

/// Metric ball of the caloric norm.
struct CaloricDisk {
    SpaceTimePoint center;
    double radius = 0.0;

    CaloricDisk(SpaceTimePoint c, double r);

    bool contains(const SpaceTimePoint& z) const;
    /// The concentric disk of twice the radius.
    CaloricDisk doubled() const { return CaloricDisk(center, 2.0 * radius); }
};

/// Smooth compactly supported cutoff in the caloric norm around the center
/// of the doubled disk 2D: identically one inside radius rho_in * 2r,
/// identically zero outside rho_out * 2r, with a C-infinity transition and
/// closed-form derivatives.
class CutoffFunction {
public:
    /// Requires 0 < rho_in < rho_out <= 1 and rho_in * 2 > 1 so that the
    /// plateau covers a neighbourhood of the closure of D.
    explicit CutoffFunction(const CaloricDisk& disk, double rho_in = 0.55, double rho_out = 0.95);

    const CaloricDisk& disk() const { return disk_; }
    double inner_radius() const { return inner_; }
    double outer_radius() const { return outer_; }

    double value(const SpaceTimePoint& z) const;
    std::vector<double> gradient(const SpaceTimePoint& z) const;
    double laplacian(const SpaceTimePoint& z) const;
    double dt(const SpaceTimePoint& z) const;

    /// True where all derivatives vanish identically (plateau or outside
    /// the support).
    bool is_flat_at(const SpaceTimePoint& z) const;

private:
    struct Profile {
        double g, g1, g2;  // value, first and second derivative in tau
    };
    Profile profile(double tau) const;

    CaloricDisk disk_;
    double inner_;
    double outer_;
};

}  // namespace caloric
