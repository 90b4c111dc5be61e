#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "caloric/domain.hpp"
#include "caloric/point.hpp"

namespace caloric {

enum class NodeClass : std::uint8_t { exterior, boundary, interior };

struct StencilError : std::runtime_error {
    std::vector<std::size_t> offending_nodes;
    StencilError(const std::string& what, std::vector<std::size_t> nodes)
        : std::runtime_error(what), offending_nodes(std::move(nodes)) {}
};

/// Real field sampled on a uniform space-time lattice over the bounding box
/// of a domain. Nodes are classified interior (inside the open domain),
/// boundary (outside but adjacent to an interior node along an axis), or
/// exterior.
class GridFunction {
public:
    /// counts[i] nodes along axis i (x_1..x_N, t); each count >= 2.
    GridFunction(DomainSpec domain, std::vector<std::size_t> counts);

    const DomainSpec& domain() const { return domain_; }
    std::size_t spatial_dimension() const { return domain_.spatial_dimension(); }
    std::size_t axes() const { return counts_.size(); }
    std::size_t count(std::size_t axis) const { return counts_[axis]; }
    double spacing(std::size_t axis) const { return spacing_[axis]; }
    std::size_t node_count() const { return values_.size(); }

    std::size_t flatten(const std::vector<std::size_t>& idx) const;
    std::vector<std::size_t> unflatten(std::size_t flat) const;
    SpaceTimePoint point(std::size_t flat) const;
    SpaceTimePoint point(const std::vector<std::size_t>& idx) const;

    NodeClass node_class(std::size_t flat) const { return classes_[flat]; }
    double value(std::size_t flat) const { return values_[flat]; }
    double& value(std::size_t flat) { return values_[flat]; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    /// Samples the field at every node (including exterior ones).
    void fill(const std::function<double(const SpaceTimePoint&)>& f);

    /// Tensor-product interpolation of the stored values: order 1 is
    /// multilinear over the containing cell, order 2 tensor-quadratic.
    /// Stencils are clamped to the grid box; touching an exterior node (or
    /// leaving the box entirely) raises StencilError naming the nodes.
    double interpolate(const SpaceTimePoint& z, int order) const;

    /// One row per node: indices, coordinates, class, value. Deterministic
    /// formatting, suitable for byte-wise comparison.
    void write_csv(std::ostream& out) const;

private:
    DomainSpec domain_;
    std::vector<std::size_t> counts_;
    std::vector<double> origin_;
    std::vector<double> spacing_;
    std::vector<std::size_t> strides_;
    std::vector<double> values_;
    std::vector<NodeClass> classes_;
};

}  // namespace caloric
