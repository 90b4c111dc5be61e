#include "caloric/heat_ball.hpp"

#include <cmath>
#include <numbers>

#include <ostream>

#include "caloric/gauss_legendre.hpp"
#include "caloric/io_format.hpp"

namespace caloric {

double heat_ball_section_radius(double s, double r, std::size_t spatial_dim) {
    if (!(s > 0.0 && s < r)) {
        throw std::invalid_argument("heat_ball_section_radius: depth must satisfy 0 < s < r");
    }
    return std::sqrt(2.0 * static_cast<double>(spatial_dim) * s * std::log(r / s));
}

QuadratureResolution QuadratureResolution::refined(double factor) const {
    QuadratureResolution r = *this;
    auto scale = [factor](int v) { return static_cast<int>(std::ceil(v * factor)); };
    r.depth_levels = scale(depth_levels);
    r.depth_order = scale(depth_order);
    r.radial_order = scale(radial_order);
    r.angular_order = scale(angular_order);
    r.polar_order = scale(polar_order);
    return r;
}

namespace {

/// Depth breakpoints on (0, r), geometrically graded toward both endpoints;
/// the Watson kernel varies fastest near s = 0 and the section collapses
/// near s = r.
std::vector<double> depth_breakpoints(double r, int levels, double q) {
    const double half = 0.5 * r;
    // The sliver (s_max, r) is dropped: its mass scales like (r - s)^{(N+2)/2}
    // and sits about five orders below the normalization tolerance, while its
    // nodes would sit within roundoff of the ball boundary.
    const double s_max = r * (1.0 - 1e-9);
    std::vector<double> pts;
    pts.push_back(0.0);
    for (int j = levels; j >= 1; --j) pts.push_back(half * std::pow(q, j));
    pts.push_back(half);
    for (int j = 1; j <= levels; ++j) {
        const double p = r - half * std::pow(q, j);
        if (p >= s_max) break;
        pts.push_back(p);
    }
    pts.push_back(s_max);
    std::vector<double> clean;
    for (double p : pts) {
        if (!clean.empty()) {
            const bool separated = p > clean.back() && (p - clean.back()) > 1e-12 * p;
            if (!separated) continue;
        }
        clean.push_back(p);
    }
    return clean;
}

}  // namespace

HeatBallQuadrature::HeatBallQuadrature(SpaceTimePoint pole, double radius, QuadratureResolution res)
    : pole_(std::move(pole)), radius_(radius), res_(res) {
    if (!(radius > 0.0)) throw std::invalid_argument("HeatBallQuadrature: radius must be positive");
    const std::size_t n = pole_.spatial_dimension();
    if (n < 1 || n > 3) {
        throw std::invalid_argument("HeatBallQuadrature: spatial rules are shipped for N = 1, 2, 3");
    }

    const std::vector<double> pts = depth_breakpoints(radius, res.depth_levels, res.grading);
    for (std::size_t seg = 0; seg + 1 < pts.size(); ++seg) {
        auto [ss, sw] = gauss_legendre_on(res.depth_order, pts[seg], pts[seg + 1]);
        for (int a = 0; a < res.depth_order; ++a) {
            const double s = ss[a];
            const double ws = sw[a];
            // Depths rounded onto the endpoints carry vanishing sections.
            if (!(s > 0.0 && s < radius)) continue;
            const double R = heat_ball_section_radius(s, radius, n);
            const double t = pole_.t - s;

            if (n == 1) {
                auto [ys, yw] = gauss_legendre_on(res.radial_order, -R, R);
                for (int i = 0; i < res.radial_order; ++i) {
                    nodes_.emplace_back(std::vector<double>{pole_.x[0] + ys[i]}, t);
                    offsets_.emplace_back(std::vector<double>{-ys[i]}, s);
                    weights_.push_back(ws * yw[i]);
                }
            } else if (n == 2) {
                auto [rs, rw] = gauss_legendre_on(res.radial_order, 0.0, R);
                for (int i = 0; i < res.radial_order; ++i) {
                    const double rho = rs[i];
                    const double wr = rw[i] * rho * 2.0 * std::numbers::pi / res.angular_order;
                    for (int k = 0; k < res.angular_order; ++k) {
                        const double th = 2.0 * std::numbers::pi * (k + 0.5) / res.angular_order;
                        const double dx = rho * std::cos(th), dy = rho * std::sin(th);
                        nodes_.emplace_back(std::vector<double>{pole_.x[0] + dx, pole_.x[1] + dy}, t);
                        offsets_.emplace_back(std::vector<double>{-dx, -dy}, s);
                        weights_.push_back(ws * wr);
                    }
                }
            } else {
                auto [rs, rw] = gauss_legendre_on(res.radial_order, 0.0, R);
                auto [cs, cw] = gauss_legendre_on(res.polar_order, -1.0, 1.0);
                for (int i = 0; i < res.radial_order; ++i) {
                    const double rho = rs[i];
                    for (int p = 0; p < res.polar_order; ++p) {
                        const double cosphi = cs[p];
                        const double sinphi = std::sqrt(std::max(0.0, 1.0 - cosphi * cosphi));
                        const double wrp =
                            rw[i] * rho * rho * cw[p] * 2.0 * std::numbers::pi / res.angular_order;
                        for (int k = 0; k < res.angular_order; ++k) {
                            const double th = 2.0 * std::numbers::pi * (k + 0.5) / res.angular_order;
                            const double dx = rho * sinphi * std::cos(th);
                            const double dy = rho * sinphi * std::sin(th);
                            const double dz = rho * cosphi;
                            nodes_.emplace_back(std::vector<double>{pole_.x[0] + dx, pole_.x[1] + dy,
                                                                    pole_.x[2] + dz},
                                                t);
                            offsets_.emplace_back(std::vector<double>{-dx, -dy, -dz}, s);
                            weights_.push_back(ws * wrp);
                        }
                    }
                }
            }
        }
    }
}

HeatBallQuadrature build_heat_ball_quadrature(const SpaceTimePoint& pole, double radius,
                                              const QuadratureResolution& res) {
    QuadratureResolution cur = res;
    double achieved = 0.0;
    for (int attempt = 0; attempt <= res.max_refinements; ++attempt) {
        HeatBallQuadrature quad(pole, radius, cur);
        const double one = mean_value([](const SpaceTimePoint&) { return 1.0; }, quad);
        achieved = std::abs(one - 1.0);
        quad.normalization_error_ = achieved;
        if (achieved <= res.normalization_tolerance) return quad;
        cur = cur.refined();
    }
    throw QuadratureError("build_heat_ball_quadrature: normalization tolerance not met at maximum refinement",
                          achieved);
}

double mean_value(const Field& u, const HeatBallQuadrature& quad) {
    return mean_value_at(u, quad, quad.pole());
}

double mean_value_at(const Field& u, const HeatBallQuadrature& quad, const SpaceTimePoint& pole) {
    const std::size_t n = quad.pole().spatial_dimension();
    if (pole.spatial_dimension() != n) {
        throw std::invalid_argument("mean_value_at: pole dimension mismatch");
    }
    const double scale = std::pow(4.0 * std::numbers::pi * quad.radius(), -static_cast<double>(n) / 2.0);
    double total = 0.0;
    const auto& offsets = quad.offsets();
    const auto& weights = quad.weights();
    SpaceTimePoint node(std::vector<double>(n, 0.0), 0.0);
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        const SpaceTimePoint& d = offsets[i];
        const double watson = spatial_norm_sq(d) / (4.0 * d.t * d.t);
        for (std::size_t j = 0; j < n; ++j) node.x[j] = pole.x[j] - d.x[j];
        node.t = pole.t - d.t;
        total += weights[i] * watson * u(node);
    }
    return scale * total;
}

void write_quadrature_csv(const HeatBallQuadrature& quad, std::ostream& out) {
    const std::size_t n = quad.pole().spatial_dimension();
    out << "# pole " << quad.pole().str() << ", radius " << format_double(quad.radius())
        << ", nodes " << quad.nodes().size() << ", normalization_error "
        << format_double(quad.normalization_error()) << '\n';
    for (std::size_t i = 0; i < n; ++i) out << "x" << (i + 1) << ',';
    out << "t,depth,weight,watson\n";
    for (std::size_t i = 0; i < quad.nodes().size(); ++i) {
        const SpaceTimePoint& z = quad.nodes()[i];
        const SpaceTimePoint& d = quad.offsets()[i];
        for (std::size_t j = 0; j < n; ++j) out << format_double(z.x[j]) << ',';
        out << format_double(z.t) << ',' << format_double(d.t) << ','
            << format_double(quad.weights()[i]) << ','
            << format_double(spatial_norm_sq(d) / (4.0 * d.t * d.t)) << '\n';
    }
}

}  // namespace caloric
