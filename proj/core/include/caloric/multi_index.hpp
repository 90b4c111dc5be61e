#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace caloric {

/// Exponent tuple (a_1, ..., a_N, k): N spatial exponents plus one temporal.
class MultiIndex {
public:
    /// Zero multi-index in the given spatial dimension.
    explicit MultiIndex(std::size_t spatial_dim) : e_(spatial_dim + 1, 0) {}

    /// Full tuple including the trailing temporal exponent.
    MultiIndex(std::initializer_list<std::uint32_t> e);

    static MultiIndex from_exponents(std::vector<std::uint32_t> e);

    std::size_t spatial_dimension() const { return e_.size() - 1; }
    std::uint32_t spatial(std::size_t i) const { return e_[i]; }
    std::uint32_t temporal() const { return e_.back(); }
    std::span<const std::uint32_t> exponents() const { return e_; }

    /// Caloric height |a|_c: spatial exponents count once, the temporal twice.
    int caloric_height() const;

    int total_spatial_degree() const;

    MultiIndex with_spatial(std::size_t i, std::uint32_t v) const;
    MultiIndex with_temporal(std::uint32_t v) const;

    std::string str() const;

    bool operator==(const MultiIndex&) const = default;

private:
    std::vector<std::uint32_t> e_;
};

/// Deterministic term/basis order: by caloric height, ties broken
/// lexicographically on the exponent tuple.
struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All multi-indices in the given spatial dimension with caloric height
/// <= max_height, in GradedLexLess order.
std::vector<MultiIndex> monomials_up_to_height(std::size_t spatial_dim, int max_height);

}  // namespace caloric
