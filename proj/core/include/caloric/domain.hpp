#pragma once

#include <optional>
#include <vector>

#include "caloric/expression.hpp"
#include "caloric/point.hpp"

namespace caloric {

/// Axis-aligned box in R^{N+1}; components are (x_1..x_N, t).
struct Box {
    std::vector<double> lo, hi;

    std::size_t spatial_dimension() const { return lo.size() - 1; }
    bool contains_open(const SpaceTimePoint& z) const;
    bool contains_closed(const SpaceTimePoint& z) const;
};

/// Bounded space-time domain: a union of open boxes, optionally carved by a
/// predicate expression (inside where the expression is positive). With no
/// boxes the predicate alone decides membership within the bounding box.
class DomainSpec {
public:
    static DomainSpec from_boxes(std::vector<Box> boxes);
    static DomainSpec from_predicate(Box bounding_box, Expression predicate);
    static DomainSpec from_boxes_and_predicate(std::vector<Box> boxes, Expression predicate);

    bool inside(const SpaceTimePoint& z) const;
    /// Membership in the closure, where it is available in closed form
    /// (union of closed boxes); false for predicate-only domains.
    bool on_closure(const SpaceTimePoint& z) const;
    const Box& bounding_box() const { return bounding_; }
    std::size_t spatial_dimension() const { return bounding_.spatial_dimension(); }

private:
    DomainSpec(std::vector<Box> boxes, std::optional<Expression> predicate, Box bounding);

    std::vector<Box> boxes_;
    std::optional<Expression> predicate_;
    Box bounding_;
};

}  // namespace caloric
