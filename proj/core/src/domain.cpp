#include "caloric/domain.hpp"

#include <stdexcept>

namespace caloric {

namespace {

double component(const SpaceTimePoint& z, std::size_t i) {
    return i < z.spatial_dimension() ? z.x[i] : z.t;
}

}  // namespace

bool Box::contains_open(const SpaceTimePoint& z) const {
    for (std::size_t i = 0; i < lo.size(); ++i) {
        const double v = component(z, i);
        if (!(lo[i] < v && v < hi[i])) return false;
    }
    return true;
}

bool Box::contains_closed(const SpaceTimePoint& z) const {
    for (std::size_t i = 0; i < lo.size(); ++i) {
        const double v = component(z, i);
        if (!(lo[i] <= v && v <= hi[i])) return false;
    }
    return true;
}

DomainSpec::DomainSpec(std::vector<Box> boxes, std::optional<Expression> predicate, Box bounding)
    : boxes_(std::move(boxes)), predicate_(std::move(predicate)), bounding_(std::move(bounding)) {
    if (bounding_.lo.size() < 2 || bounding_.lo.size() != bounding_.hi.size()) {
        throw std::invalid_argument("DomainSpec: malformed bounding box");
    }
    for (std::size_t i = 0; i < bounding_.lo.size(); ++i) {
        if (!(bounding_.lo[i] < bounding_.hi[i])) {
            throw std::invalid_argument("DomainSpec: bounding box must have positive extent");
        }
    }
    for (const Box& b : boxes_) {
        if (b.lo.size() != bounding_.lo.size() || b.hi.size() != bounding_.hi.size()) {
            throw std::invalid_argument("DomainSpec: box dimension mismatch");
        }
    }
    if (predicate_ && predicate_->spatial_dimension() != spatial_dimension()) {
        throw std::invalid_argument("DomainSpec: predicate dimension mismatch");
    }
}

DomainSpec DomainSpec::from_boxes(std::vector<Box> boxes) {
    if (boxes.empty()) throw std::invalid_argument("DomainSpec: need at least one box");
    Box bounding = boxes.front();
    for (const Box& b : boxes) {
        for (std::size_t i = 0; i < bounding.lo.size(); ++i) {
            bounding.lo[i] = std::min(bounding.lo[i], b.lo[i]);
            bounding.hi[i] = std::max(bounding.hi[i], b.hi[i]);
        }
    }
    return DomainSpec(std::move(boxes), std::nullopt, std::move(bounding));
}

DomainSpec DomainSpec::from_predicate(Box bounding_box, Expression predicate) {
    return DomainSpec({}, std::move(predicate), std::move(bounding_box));
}

DomainSpec DomainSpec::from_boxes_and_predicate(std::vector<Box> boxes, Expression predicate) {
    DomainSpec d = from_boxes(std::move(boxes));
    d.predicate_ = std::move(predicate);
    return d;
}

bool DomainSpec::on_closure(const SpaceTimePoint& z) const {
    if (boxes_.empty() || predicate_) return false;
    for (const Box& b : boxes_) {
        if (b.contains_closed(z)) return true;
    }
    return false;
}

bool DomainSpec::inside(const SpaceTimePoint& z) const {
    if (boxes_.empty()) {
        return bounding_.contains_open(z) && (*predicate_)(z) > 0.0;
    }
    bool in_union = false;
    for (const Box& b : boxes_) {
        if (b.contains_open(z)) {
            in_union = true;
            break;
        }
    }
    if (!in_union) return false;
    return !predicate_ || (*predicate_)(z) > 0.0;
}

}  // namespace caloric
