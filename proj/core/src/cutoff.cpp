#include "caloric/cutoff.hpp"

#include <cmath>
#include <stdexcept>

#include "caloric/kernels.hpp"

namespace caloric {

namespace {

// f(s) = exp(-1/s) for s > 0, extended by zero: the mollifier building block.
double f0(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }
double f1(double s) { return s > 0.0 ? std::exp(-1.0 / s) / (s * s) : 0.0; }
double f2(double s) { return s > 0.0 ? std::exp(-1.0 / s) * (1.0 - 2.0 * s) / (s * s * s * s) : 0.0; }

}  // namespace

CaloricDisk::CaloricDisk(SpaceTimePoint c, double r) : center(std::move(c)), radius(r) {
    if (!(r > 0.0)) throw std::invalid_argument("CaloricDisk: radius must be positive");
}

bool CaloricDisk::contains(const SpaceTimePoint& z) const {
    return caloric_norm(z - center) < radius;
}

CutoffFunction::CutoffFunction(const CaloricDisk& disk, double rho_in, double rho_out)
    : disk_(disk), inner_(rho_in * 2.0 * disk.radius), outer_(rho_out * 2.0 * disk.radius) {
    if (!(rho_in > 0.0 && rho_in < rho_out && rho_out <= 1.0)) {
        throw std::invalid_argument("CutoffFunction: need 0 < rho_in < rho_out <= 1");
    }
    if (!(inner_ > disk.radius)) {
        throw std::invalid_argument("CutoffFunction: plateau must cover the closure of D (rho_in > 1/2)");
    }
}

CutoffFunction::Profile CutoffFunction::profile(double tau) const {
    // Smoothstep from the two-sided mollifier quotient: g = A / (A + B) with
    // A = f(1 - tau), B = f(tau); all derivatives vanish at tau = 0 and 1.
    const double a = f0(1.0 - tau), b = f0(tau);
    const double a1 = -f1(1.0 - tau), b1 = f1(tau);
    const double a2 = f2(1.0 - tau), b2 = f2(tau);
    const double s = a + b;
    const double s1 = a1 + b1;
    const double w = a1 * b - a * b1;
    const double w1 = a2 * b - a * b2;
    Profile p;
    p.g = a / s;
    p.g1 = w / (s * s);
    p.g2 = (w1 * s - 2.0 * w * s1) / (s * s * s);
    return p;
}

double CutoffFunction::value(const SpaceTimePoint& z) const {
    const double n = caloric_norm(z - disk_.center);
    if (n <= inner_) return 1.0;
    if (n >= outer_) return 0.0;
    return profile((n - inner_) / (outer_ - inner_)).g;
}

bool CutoffFunction::is_flat_at(const SpaceTimePoint& z) const {
    const double n = caloric_norm(z - disk_.center);
    return n <= inner_ || n >= outer_;
}

std::vector<double> CutoffFunction::gradient(const SpaceTimePoint& z) const {
    std::vector<double> g(z.spatial_dimension(), 0.0);
    const SpaceTimePoint v = z - disk_.center;
    const double n = caloric_norm(v);
    if (n <= inner_ || n >= outer_) return g;
    const double s = spatial_norm_sq(v);
    const double F = s * s + v.t * v.t;
    const double g1 = profile((n - inner_) / (outer_ - inner_)).g1 / (outer_ - inner_);
    const double common = g1 * s * std::pow(F, -0.75);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = common * v.x[i];
    return g;
}

double CutoffFunction::dt(const SpaceTimePoint& z) const {
    const SpaceTimePoint v = z - disk_.center;
    const double n = caloric_norm(v);
    if (n <= inner_ || n >= outer_) return 0.0;
    const double s = spatial_norm_sq(v);
    const double F = s * s + v.t * v.t;
    const double g1 = profile((n - inner_) / (outer_ - inner_)).g1 / (outer_ - inner_);
    return g1 * 0.5 * v.t * std::pow(F, -0.75);
}

double CutoffFunction::laplacian(const SpaceTimePoint& z) const {
    const SpaceTimePoint v = z - disk_.center;
    const double n = caloric_norm(v);
    if (n <= inner_ || n >= outer_) return 0.0;
    const double N = static_cast<double>(z.spatial_dimension());
    const double s = spatial_norm_sq(v);
    const double F = s * s + v.t * v.t;
    const double width = outer_ - inner_;
    const Profile p = profile((n - inner_) / width);
    const double grad_n_sq = s * s * s * std::pow(F, -1.5);
    const double lap_n = (N + 2.0) * s * std::pow(F, -0.75) - 3.0 * s * s * s * std::pow(F, -1.75);
    return p.g2 / (width * width) * grad_n_sq + p.g1 / width * lap_n;
}

}  // namespace caloric
