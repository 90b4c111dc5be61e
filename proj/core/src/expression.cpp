#include "caloric/expression.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace caloric {

struct Expression::Node {
    enum class Kind { number, variable, unary, binary, call };
    Kind kind = Kind::number;
    double value = 0.0;           // number
    std::size_t var_index = 0;    // variable: 0..N-1 spatial, N temporal
    char op = 0;                  // unary/binary operator
    std::string func;             // call
    std::shared_ptr<const Node> lhs, rhs;

    double eval(const SpaceTimePoint& z) const {
        switch (kind) {
            case Kind::number:
                return value;
            case Kind::variable:
                return var_index < z.spatial_dimension() ? z.x[var_index] : z.t;
            case Kind::unary:
                return op == '-' ? -lhs->eval(z) : lhs->eval(z);
            case Kind::binary: {
                const double a = lhs->eval(z), b = rhs->eval(z);
                switch (op) {
                    case '+': return a + b;
                    case '-': return a - b;
                    case '*': return a * b;
                    case '/': return a / b;
                    case '^': return std::pow(a, b);
                }
                return 0.0;
            }
            case Kind::call: {
                const double a = lhs->eval(z);
                if (func == "exp") return std::exp(a);
                if (func == "cosh") return std::cosh(a);
                if (func == "sinh") return std::sinh(a);
                if (func == "abs") return std::abs(a);
                if (func == "sqrt") return std::sqrt(a);
                if (func == "log") return std::log(a);
                if (func == "cos") return std::cos(a);
                if (func == "sin") return std::sin(a);
                return 0.0;
            }
        }
        return 0.0;
    }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Node = Expression::Node;

class Parser {
public:
    Parser(const std::string& text, std::size_t n) : text_(text), n_(n) {}

    NodePtr run() {
        NodePtr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) throw ExpressionError("unexpected trailing input", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr parse_sum() {
        NodePtr lhs = parse_product();
        for (;;) {
            char op;
            if (accept('+')) op = '+';
            else if (accept('-')) op = '-';
            else return lhs;
            auto node = std::make_shared<Node>();
            node->kind = Node::Kind::binary;
            node->op = op;
            node->lhs = lhs;
            node->rhs = parse_product();
            lhs = node;
        }
    }

    NodePtr parse_product() {
        NodePtr lhs = parse_unary();
        for (;;) {
            char op;
            if (accept('*')) op = '*';
            else if (accept('/')) op = '/';
            else return lhs;
            auto node = std::make_shared<Node>();
            node->kind = Node::Kind::binary;
            node->op = op;
            node->lhs = lhs;
            node->rhs = parse_unary();
            lhs = node;
        }
    }

    NodePtr parse_unary() {
        if (accept('-')) {
            auto node = std::make_shared<Node>();
            node->kind = Node::Kind::unary;
            node->op = '-';
            node->lhs = parse_unary();
            return node;
        }
        if (accept('+')) return parse_unary();
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (accept('^')) {
            auto node = std::make_shared<Node>();
            node->kind = Node::Kind::binary;
            node->op = '^';
            node->lhs = base;
            node->rhs = parse_unary();  // right associative, signs allowed
            return node;
        }
        return base;
    }

    NodePtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ExpressionError("unexpected end of expression", pos_);
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (c == '(') {
            ++pos_;
            NodePtr e = parse_sum();
            if (!accept(')')) throw ExpressionError("expected ')'", pos_);
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_word();
        throw ExpressionError(std::string("unexpected character '") + c + "'", pos_);
    }

    NodePtr parse_number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
            ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        try {
            auto node = std::make_shared<Node>();
            node->kind = Node::Kind::number;
            node->value = std::stod(text_.substr(start, pos_ - start));
            return node;
        } catch (const std::exception&) {
            throw ExpressionError("malformed number", start);
        }
    }

    NodePtr parse_word() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])))) ++pos_;
        const std::string word = text_.substr(start, pos_ - start);

        if (word == "pi") {
            auto node = std::make_shared<Node>();
            node->kind = Node::Kind::number;
            node->value = std::numbers::pi;
            return node;
        }
        if (word == "t") {
            auto node = std::make_shared<Node>();
            node->kind = Node::Kind::variable;
            node->var_index = n_;
            return node;
        }
        if (word[0] == 'x') {
            std::size_t j = 1;
            if (word.size() > 1) {
                for (std::size_t i = 1; i < word.size(); ++i) {
                    if (!std::isdigit(static_cast<unsigned char>(word[i]))) {
                        throw ExpressionError("unknown symbol '" + word + "'", start);
                    }
                }
                j = std::stoul(word.substr(1));
            }
            if (j < 1 || j > n_) {
                throw ExpressionError("variable '" + word + "' out of range for dimension " +
                                          std::to_string(n_),
                                      start);
            }
            auto node = std::make_shared<Node>();
            node->kind = Node::Kind::variable;
            node->var_index = j - 1;
            return node;
        }
        static const char* kFuncs[] = {"exp", "cosh", "sinh", "abs", "sqrt", "log", "cos", "sin"};
        for (const char* f : kFuncs) {
            if (word == f) {
                if (!accept('(')) throw ExpressionError("expected '(' after '" + word + "'", pos_);
                auto node = std::make_shared<Node>();
                node->kind = Node::Kind::call;
                node->func = word;
                node->lhs = parse_sum();
                if (!accept(')')) throw ExpressionError("expected ')'", pos_);
                return node;
            }
        }
        throw ExpressionError("unknown symbol '" + word + "'", start);
    }

    const std::string& text_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(const std::string& text, std::size_t spatial_dim) {
    if (spatial_dim < 1) throw std::invalid_argument("Expression: spatial dimension must be >= 1");
    return Expression(Parser(text, spatial_dim).run(), text, spatial_dim);
}

double Expression::operator()(const SpaceTimePoint& z) const {
    if (z.spatial_dimension() != spatial_dim_) {
        throw std::invalid_argument("Expression: point dimension mismatch");
    }
    return root_->eval(z);
}

}  // namespace caloric
