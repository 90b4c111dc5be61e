#pragma once

#include <vector>

#include "caloric/point.hpp"

namespace caloric {

/// Gauss-Weierstrass kernel: (4 pi t)^{-N/2} exp(-|x|^2 / 4t) for t > 0,
/// zero for t <= 0. The value at the origin (the pole) is undefined and
/// rejected.
double gw_kernel(const SpaceTimePoint& z);

/// Spatial gradient of the kernel: -(x / 2t) gw_kernel(z) for t > 0, the
/// zero vector for t <= 0 away from the pole.
std::vector<double> gw_gradient(const SpaceTimePoint& z);

/// The caloric norm (|x|^4 + t^2)^{1/4}; homogeneous of degree one under
/// the parabolic dilation (x, t) -> (s x, s^2 t).
double caloric_norm(const SpaceTimePoint& z);

}  // namespace caloric
