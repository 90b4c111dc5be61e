#include "caloric/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace caloric {

MultiIndex::MultiIndex(std::initializer_list<std::uint32_t> e) : e_(e) {
    if (e_.size() < 2) {
        throw std::invalid_argument("MultiIndex: need at least one spatial and one temporal exponent");
    }
}

MultiIndex MultiIndex::from_exponents(std::vector<std::uint32_t> e) {
    if (e.size() < 2) {
        throw std::invalid_argument("MultiIndex: need at least one spatial and one temporal exponent");
    }
    MultiIndex m(e.size() - 1);
    m.e_ = std::move(e);
    return m;
}

int MultiIndex::caloric_height() const {
    int h = 0;
    for (std::size_t i = 0; i + 1 < e_.size(); ++i) h += static_cast<int>(e_[i]);
    return h + 2 * static_cast<int>(e_.back());
}

int MultiIndex::total_spatial_degree() const {
    int d = 0;
    for (std::size_t i = 0; i + 1 < e_.size(); ++i) d += static_cast<int>(e_[i]);
    return d;
}

MultiIndex MultiIndex::with_spatial(std::size_t i, std::uint32_t v) const {
    MultiIndex m = *this;
    m.e_.at(i) = v;
    return m;
}

MultiIndex MultiIndex::with_temporal(std::uint32_t v) const {
    MultiIndex m = *this;
    m.e_.back() = v;
    return m;
}

std::string MultiIndex::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e_[i]);
    }
    s += ')';
    return s;
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
    const int ha = a.caloric_height();
    const int hb = b.caloric_height();
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(),
                                        b.exponents().begin(), b.exponents().end());
}

namespace {

void enumerate(std::size_t pos, int remaining, std::vector<std::uint32_t>& cur,
               std::vector<MultiIndex>& out) {
    const std::size_t last = cur.size() - 1;
    if (pos == last) {
        // Temporal exponent counts twice toward the height budget.
        for (int k = 0; 2 * k <= remaining; ++k) {
            cur[last] = static_cast<std::uint32_t>(k);
            out.push_back(MultiIndex::from_exponents(cur));
        }
        cur[last] = 0;
        return;
    }
    for (int a = 0; a <= remaining; ++a) {
        cur[pos] = static_cast<std::uint32_t>(a);
        enumerate(pos + 1, remaining - a, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> monomials_up_to_height(std::size_t spatial_dim, int max_height) {
    if (spatial_dim < 1) throw std::invalid_argument("monomials_up_to_height: spatial_dim must be >= 1");
    std::vector<MultiIndex> out;
    if (max_height < 0) return out;
    std::vector<std::uint32_t> cur(spatial_dim + 1, 0);
    enumerate(0, max_height, cur, out);
    std::sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
        return GradedLexLess{}(a, b);
    });
    return out;
}

}  // namespace caloric
