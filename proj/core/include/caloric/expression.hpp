#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "caloric/point.hpp"

namespace caloric {

struct ExpressionError : std::runtime_error {
    std::size_t position;
    ExpressionError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Closed-form scalar expression over x_1..x_N and t: arithmetic, powers,
/// and exp/cosh/sinh/abs/sqrt/log/cos/sin, with the constant pi. Enough to
/// express the caloric comparators, including the heat kernel.
class Expression {
public:
    static Expression parse(const std::string& text, std::size_t spatial_dim);

    double operator()(const SpaceTimePoint& z) const;
    const std::string& text() const { return text_; }
    std::size_t spatial_dimension() const { return spatial_dim_; }

    struct Node;

private:
    Expression(std::shared_ptr<const Node> root, std::string text, std::size_t spatial_dim)
        : root_(std::move(root)), text_(std::move(text)), spatial_dim_(spatial_dim) {}

    std::shared_ptr<const Node> root_;
    std::string text_;
    std::size_t spatial_dim_;
};

}  // namespace caloric
