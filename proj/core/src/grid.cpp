#include "caloric/grid.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "caloric/io_format.hpp"

namespace caloric {

GridFunction::GridFunction(DomainSpec domain, std::vector<std::size_t> counts)
    : domain_(std::move(domain)), counts_(std::move(counts)) {
    const std::size_t axes = domain_.spatial_dimension() + 1;
    if (counts_.size() != axes) {
        throw std::invalid_argument("GridFunction: need one node count per axis");
    }
    std::size_t total = 1;
    origin_.resize(axes);
    spacing_.resize(axes);
    strides_.resize(axes);
    for (std::size_t i = 0; i < axes; ++i) {
        if (counts_[i] < 2) throw std::invalid_argument("GridFunction: need >= 2 nodes per axis");
        origin_[i] = domain_.bounding_box().lo[i];
        spacing_[i] = (domain_.bounding_box().hi[i] - origin_[i]) / (counts_[i] - 1);
        strides_[i] = total;
        total *= counts_[i];
    }
    values_.assign(total, 0.0);
    classes_.assign(total, NodeClass::exterior);

    for (std::size_t flat = 0; flat < total; ++flat) {
        if (domain_.inside(point(flat))) classes_[flat] = NodeClass::interior;
    }
    // Boundary: nodes of the closure that are not interior, plus exterior
    // nodes with an interior axis-neighbour (the fallback covers predicate
    // domains, where the closure is not available in closed form).
    for (std::size_t flat = 0; flat < total; ++flat) {
        if (classes_[flat] != NodeClass::exterior) continue;
        if (domain_.on_closure(point(flat))) {
            classes_[flat] = NodeClass::boundary;
            continue;
        }
        const std::vector<std::size_t> idx = unflatten(flat);
        bool adjacent = false;
        for (std::size_t axis = 0; axis < axes && !adjacent; ++axis) {
            if (idx[axis] > 0 && classes_[flat - strides_[axis]] == NodeClass::interior) adjacent = true;
            if (idx[axis] + 1 < counts_[axis] && classes_[flat + strides_[axis]] == NodeClass::interior) {
                adjacent = true;
            }
        }
        if (adjacent) classes_[flat] = NodeClass::boundary;
    }
}

std::size_t GridFunction::flatten(const std::vector<std::size_t>& idx) const {
    std::size_t flat = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) flat += idx[i] * strides_[i];
    return flat;
}

std::vector<std::size_t> GridFunction::unflatten(std::size_t flat) const {
    std::vector<std::size_t> idx(counts_.size());
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        idx[i] = flat % counts_[i];
        flat /= counts_[i];
    }
    return idx;
}

SpaceTimePoint GridFunction::point(std::size_t flat) const { return point(unflatten(flat)); }

SpaceTimePoint GridFunction::point(const std::vector<std::size_t>& idx) const {
    const std::size_t n = spatial_dimension();
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = origin_[i] + spacing_[i] * idx[i];
    return SpaceTimePoint(std::move(x), origin_[n] + spacing_[n] * idx[n]);
}

void GridFunction::fill(const std::function<double(const SpaceTimePoint&)>& f) {
    for (std::size_t flat = 0; flat < values_.size(); ++flat) values_[flat] = f(point(flat));
}

double GridFunction::interpolate(const SpaceTimePoint& z, int order) const {
    if (order != 1 && order != 2) {
        throw std::invalid_argument("GridFunction::interpolate: order must be 1 or 2");
    }
    const std::size_t axes = counts_.size();
    const std::size_t pts = static_cast<std::size_t>(order) + 1;

    std::vector<std::size_t> base(axes);
    std::vector<std::vector<double>> w(axes, std::vector<double>(pts));
    for (std::size_t i = 0; i < axes; ++i) {
        const double coord = (i < axes - 1) ? z.x[i] : z.t;
        const double u = (coord - origin_[i]) / spacing_[i];
        const double span = static_cast<double>(counts_[i] - 1);
        if (u < -1e-9 || u > span + 1e-9) {
            throw StencilError("interpolate: point outside the grid box", {});
        }
        if (order == 1) {
            const double b = std::clamp(std::floor(u), 0.0, span - 1.0);
            base[i] = static_cast<std::size_t>(b);
            const double lam = u - b;
            w[i][0] = 1.0 - lam;
            w[i][1] = lam;
        } else {
            const double b = std::clamp(std::round(u) - 1.0, 0.0, span - 2.0);
            base[i] = static_cast<std::size_t>(b);
            const double s = u - b;
            w[i][0] = 0.5 * (s - 1.0) * (s - 2.0);
            w[i][1] = s * (2.0 - s);
            w[i][2] = 0.5 * s * (s - 1.0);
        }
    }

    double total = 0.0;
    std::vector<std::size_t> off(axes, 0);
    std::vector<std::size_t> exterior_hits;
    for (;;) {
        double weight = 1.0;
        std::size_t flat = 0;
        for (std::size_t i = 0; i < axes; ++i) {
            weight *= w[i][off[i]];
            flat += (base[i] + off[i]) * strides_[i];
        }
        if (classes_[flat] == NodeClass::exterior) exterior_hits.push_back(flat);
        total += weight * values_[flat];

        std::size_t i = 0;
        for (; i < axes; ++i) {
            if (++off[i] < pts) break;
            off[i] = 0;
        }
        if (i == axes) break;
    }
    if (!exterior_hits.empty()) {
        std::string what = "interpolate: stencil touches exterior nodes:";
        for (std::size_t nodeidx : exterior_hits) what += " " + std::to_string(nodeidx);
        throw StencilError(what, std::move(exterior_hits));
    }
    return total;
}

void GridFunction::write_csv(std::ostream& out) const {
    const std::size_t n = spatial_dimension();
    out << "i_t";
    for (std::size_t i = 0; i < n; ++i) out << ",i_x" << (i + 1);
    for (std::size_t i = 0; i < n; ++i) out << ",x" << (i + 1);
    out << ",t,class,value\n";
    for (std::size_t flat = 0; flat < values_.size(); ++flat) {
        const auto idx = unflatten(flat);
        const SpaceTimePoint z = point(idx);
        out << idx[n];
        for (std::size_t i = 0; i < n; ++i) out << ',' << idx[i];
        for (std::size_t i = 0; i < n; ++i) out << ',' << format_double(z.x[i]);
        out << ',' << format_double(z.t);
        switch (classes_[flat]) {
            case NodeClass::interior: out << ",interior"; break;
            case NodeClass::boundary: out << ",boundary"; break;
            case NodeClass::exterior: out << ",exterior"; break;
        }
        out << ',' << format_double(values_[flat]) << '\n';
    }
}

}  // namespace caloric
