#include "caloric/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace caloric {

double gw_kernel(const SpaceTimePoint& z) {
    if (z.is_origin()) throw std::domain_error("gw_kernel: evaluation at the pole");
    if (z.t <= 0.0) return 0.0;
    const double n = static_cast<double>(z.spatial_dimension());
    return std::pow(4.0 * std::numbers::pi * z.t, -n / 2.0) *
           std::exp(-spatial_norm_sq(z) / (4.0 * z.t));
}

std::vector<double> gw_gradient(const SpaceTimePoint& z) {
    if (z.is_origin()) throw std::domain_error("gw_gradient: evaluation at the pole");
    std::vector<double> g(z.spatial_dimension(), 0.0);
    if (z.t <= 0.0) return g;
    const double k = gw_kernel(z);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = -z.x[i] / (2.0 * z.t) * k;
    return g;
}

double caloric_norm(const SpaceTimePoint& z) {
    const double s = spatial_norm_sq(z);
    return std::pow(s * s + z.t * z.t, 0.25);
}

}  // namespace caloric
