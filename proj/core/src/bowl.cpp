#include "caloric/bowl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace caloric {

CaloricBowl::CaloricBowl(SpaceTimePoint bottom_, double opening_)
    : bottom(std::move(bottom_)), opening(opening_) {
    if (!(opening > 0.0)) throw std::invalid_argument("CaloricBowl: opening must be positive");
}

bool CaloricBowl::contains(const SpaceTimePoint& z) const {
    const SpaceTimePoint d = z - bottom;
    const double s = spatial_norm_sq(d);
    return s < d.t && d.t < opening * opening;
}

bool CaloricBowl::in_hat(const SpaceTimePoint& z) const {
    const SpaceTimePoint d = z - bottom;
    const double s = spatial_norm_sq(d);
    return s < d.t && d.t <= opening * opening;
}

SpaceTimePoint CaloricBowl::normal_boundary_point(const std::vector<double>& x) const {
    if (x.size() != spatial_dimension()) {
        throw std::invalid_argument("normal_boundary_point: dimension mismatch");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - bottom.x[i];
        s += d * d;
    }
    if (s > opening * opening * (1.0 + 1e-12)) {
        throw std::invalid_argument("normal_boundary_point: point outside the ball |x - x0| <= r");
    }
    return SpaceTimePoint(x, bottom.t + s);
}

BoundaryData BoundaryData::restrict_to_boundary(const std::function<double(const SpaceTimePoint&)>& f,
                                                const CaloricBowl& bowl) {
    return BoundaryData([f, bowl](const std::vector<double>& x) {
        return f(bowl.normal_boundary_point(x));
    });
}

BoundaryData BoundaryData::from_ball_function(BallFunction f) { return BoundaryData(std::move(f)); }

BoundaryData BoundaryData::from_samples(std::vector<double> nodes, std::vector<double> values) {
    if (nodes.size() != values.size() || nodes.size() < 2) {
        throw std::invalid_argument("BoundaryData::from_samples: need matching node/value lists (>= 2)");
    }
    if (!std::is_sorted(nodes.begin(), nodes.end())) {
        throw std::invalid_argument("BoundaryData::from_samples: nodes must be sorted");
    }
    return BoundaryData([nodes = std::move(nodes), values = std::move(values)](const std::vector<double>& x) {
        if (x.size() != 1) {
            throw std::invalid_argument("BoundaryData::from_samples: sampled data is one-dimensional");
        }
        const double v = x[0];
        if (v <= nodes.front()) return values.front();
        if (v >= nodes.back()) return values.back();
        const auto it = std::upper_bound(nodes.begin(), nodes.end(), v);
        const std::size_t hi = static_cast<std::size_t>(it - nodes.begin());
        const double w = (v - nodes[hi - 1]) / (nodes[hi] - nodes[hi - 1]);
        return values[hi - 1] * (1.0 - w) + values[hi] * w;
    });
}

}  // namespace caloric
