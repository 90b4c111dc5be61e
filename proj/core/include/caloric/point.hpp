#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace caloric {

/// A point z = (x, t) of R^{N+1}.
struct SpaceTimePoint {
    std::vector<double> x;
    double t = 0.0;

    SpaceTimePoint() = default;
    SpaceTimePoint(std::vector<double> x_, double t_) : x(std::move(x_)), t(t_) {}
    SpaceTimePoint(double x1, double t_) : x{x1}, t(t_) {}

    std::size_t spatial_dimension() const { return x.size(); }

    bool is_origin() const {
        for (double c : x)
            if (c != 0.0) return false;
        return t == 0.0;
    }

    std::string str() const {
        std::string s = "(";
        for (double c : x) s += std::to_string(c) + ", ";
        s += std::to_string(t) + ")";
        return s;
    }
};

inline SpaceTimePoint operator-(const SpaceTimePoint& a, const SpaceTimePoint& b) {
    if (a.x.size() != b.x.size()) throw std::invalid_argument("SpaceTimePoint: dimension mismatch");
    SpaceTimePoint d = a;
    for (std::size_t i = 0; i < d.x.size(); ++i) d.x[i] -= b.x[i];
    d.t -= b.t;
    return d;
}

inline SpaceTimePoint operator+(const SpaceTimePoint& a, const SpaceTimePoint& b) {
    if (a.x.size() != b.x.size()) throw std::invalid_argument("SpaceTimePoint: dimension mismatch");
    SpaceTimePoint s = a;
    for (std::size_t i = 0; i < s.x.size(); ++i) s.x[i] += b.x[i];
    s.t += b.t;
    return s;
}

inline double spatial_norm_sq(const SpaceTimePoint& z) {
    double s = 0.0;
    for (double c : z.x) s += c * c;
    return s;
}

}  // namespace caloric
