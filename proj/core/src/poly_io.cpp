#include "caloric/poly_io.hpp"
#include <algorithm>

#include <cctype>

namespace caloric {

namespace {

class Parser {
public:
    Parser(const std::string& text, std::size_t spatial_dim) : text_(text), n_(spatial_dim) {}

    Polynomial run() {
        Polynomial p(n_);
        skip_ws();
        if (done()) throw PolyParseError("empty polynomial", pos_);
        bool negative = consume_sign();
        for (;;) {
            parse_term(p, negative);
            skip_ws();
            if (done()) break;
            if (text_[pos_] == '+') {
                ++pos_;
                negative = false;
            } else if (text_[pos_] == '-') {
                ++pos_;
                negative = true;
            } else {
                throw PolyParseError("expected '+' or '-' between terms", pos_);
            }
            skip_ws();
            if (done()) throw PolyParseError("dangling sign", pos_);
        }
        return p;
    }

private:
    bool done() const { return pos_ >= text_.size(); }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume_sign() {
        bool negative = false;
        while (!done() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            if (text_[pos_] == '-') negative = !negative;
            ++pos_;
            skip_ws();
        }
        return negative;
    }

    BigInt parse_digits() {
        skip_ws();
        const std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw PolyParseError("expected digits", pos_);
        return BigInt(text_.substr(start, pos_ - start), 10);
    }

    Rational parse_number() {
        BigInt num = parse_digits();
        skip_ws();
        if (!done() && text_[pos_] == '/') {
            ++pos_;
            BigInt den = parse_digits();
            if (den == 0) throw PolyParseError("zero denominator", pos_);
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    std::uint32_t parse_exponent() {
        BigInt e = parse_digits();
        if (e < 0 || e > 64) throw PolyParseError("exponent out of range", pos_);
        return static_cast<std::uint32_t>(e.get_ui());
    }

    void parse_term(Polynomial& p, bool negative) {
        Rational coeff = negative ? Rational(-1) : Rational(1);
        std::vector<std::uint32_t> exps(n_ + 1, 0);
        bool saw_factor = false;
        for (;;) {
            skip_ws();
            if (done()) break;
            const char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= parse_number();
                saw_factor = true;
            } else if (c == 'x' || c == 't') {
                parse_variable(exps);
                saw_factor = true;
            } else {
                break;
            }
            skip_ws();
            if (!done() && text_[pos_] == '*') {
                ++pos_;
                continue;
            }
            // Factors must be separated by '*'; a following variable or digit
            // without one is an error, handled on the next loop iteration only
            // after a '*'. Stop the term here.
            if (!done() && (std::isalnum(static_cast<unsigned char>(text_[pos_])))) {
                throw PolyParseError("expected '*' between factors", pos_);
            }
            break;
        }
        if (!saw_factor) throw PolyParseError("expected a term", pos_);
        p.add_term(MultiIndex::from_exponents(std::move(exps)), coeff);
    }

    void parse_variable(std::vector<std::uint32_t>& exps) {
        const char c = text_[pos_++];
        std::size_t index;
        if (c == 't') {
            index = n_;
        } else {
            // x or xJ (1-based); bare x means x1.
            std::size_t j = 1;
            if (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                const std::size_t start = pos_;
                while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                j = std::stoul(text_.substr(start, pos_ - start));
            }
            if (j < 1 || j > n_) {
                throw PolyParseError("variable index out of range for dimension " + std::to_string(n_), pos_);
            }
            index = j - 1;
        }
        std::uint32_t e = 1;
        skip_ws();
        if (!done() && text_[pos_] == '^') {
            ++pos_;
            e = parse_exponent();
        }
        exps[index] += e;
    }

    const std::string& text_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

void append_monomial(std::string& out, const MultiIndex& alpha, std::size_t n, bool lead_star) {
    bool first = !lead_star;
    auto sep = [&] {
        if (!first) out += '*';
        first = false;
    };
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t a = alpha.spatial(i);
        if (a == 0) continue;
        sep();
        out += (n == 1) ? "x" : "x" + std::to_string(i + 1);
        if (a > 1) out += "^" + std::to_string(a);
    }
    if (alpha.temporal() > 0) {
        sep();
        out += 't';
        if (alpha.temporal() > 1) out += "^" + std::to_string(alpha.temporal());
    }
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, std::size_t spatial_dim) {
    return Parser(text, spatial_dim).run();
}

std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const std::size_t n = p.spatial_dimension();
    // Highest caloric height first, lexicographic within a height.
    std::vector<const Polynomial::TermMap::value_type*> order;
    order.reserve(p.term_count());
    for (const auto& term : p.terms()) order.push_back(&term);
    std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        const int ha = a->first.caloric_height(), hb = b->first.caloric_height();
        if (ha != hb) return ha > hb;
        return GradedLexLess{}(a->first, b->first);
    });
    for (const auto* term : order) {
        const auto& [alpha, c] = *term;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const bool constant_term = alpha.caloric_height() == 0;
        if (mag != 1 || constant_term) {
            out += mag.get_str();
            append_monomial(out, alpha, n, /*lead_star=*/true);
        } else {
            append_monomial(out, alpha, n, /*lead_star=*/false);
        }
    }
    return out;
}

}  // namespace caloric
