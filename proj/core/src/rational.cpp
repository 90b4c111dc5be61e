#include "caloric/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace caloric {

Rational rational_from_double(double v) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument("rational_from_double: non-finite value");
    }
    return Rational(v);  // mpq_set_d is exact
}

double to_double(const Rational& q) { return q.get_d(); }

std::optional<Rational> snap_to_rational(double v, double tol, std::uint64_t max_den) {
    if (!std::isfinite(v)) return std::nullopt;

    const bool negative = v < 0;
    double x = std::abs(v);

    // Convergents p_k/q_k of the continued fraction of x.
    BigInt p_prev = 0, q_prev = 1;  // h_{-2}/k_{-2}
    BigInt p = 1, q = 0;            // h_{-1}/k_{-1}: the first step yields floor(x)/1
    double frac = x;
    const BigInt den_bound = BigInt(static_cast<unsigned long>(max_den));

    for (int iter = 0; iter < 64; ++iter) {
        const double a_floor = std::floor(frac);
        if (a_floor > 9e18) break;
        BigInt a(a_floor);
        BigInt p_next = a * p + p_prev;
        BigInt q_next = a * q + q_prev;
        if (q_next > den_bound) break;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;

        Rational cand(p, q);
        cand.canonicalize();
        if (std::abs(cand.get_d() - x) <= tol) {
            if (negative) cand = -cand;
            return cand;
        }
        const double rem = frac - a_floor;
        if (rem < 1e-18) break;
        frac = 1.0 / rem;
    }
    return std::nullopt;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    std::size_t i = 0;
    auto expect_digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == from) throw std::invalid_argument("parse_rational: expected digits in '" + text + "'");
        return j;
    };
    if (text[i] == '+' || text[i] == '-') ++i;
    i = expect_digits(i);
    if (i < text.size()) {
        if (text[i] != '/') throw std::invalid_argument("parse_rational: unexpected character in '" + text + "'");
        i = expect_digits(i + 1);
        if (i != text.size()) throw std::invalid_argument("parse_rational: trailing characters in '" + text + "'");
    }
    Rational q(text, 10);
    if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

}  // namespace caloric
