#pragma once

// Octonion expression language for the evaluator command.
//
// Grammar (whitespace allowed between tokens):
//   expr     := term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := rational | basis | '(' expr ')' | '-' factor
//   rational := integer ['/' positive-integer]
//   basis    := 'e' digit1-7
//
// '*' associates to the LEFT; that matters because the algebra is
// non-associative, so (e1*e2)*e4 and e1*(e2*e4) are different elements.
// print() emits a fully parenthesized canonical form whose re-parse yields a
// structurally identical tree.

#include <octaudit/octonion.hpp>
#include <octaudit/rational.hpp>

#include <cctype>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>

namespace octaudit::expr {

class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    enum class Kind { Literal, Basis, Neg, Add, Sub, Mul };

    Kind kind;
    Rational value;   // Literal (always nonnegative when built by the parser)
    int basis_index;  // Basis (1..7)
    NodePtr lhs;      // Neg (child), Add/Sub/Mul (left)
    NodePtr rhs;      // Add/Sub/Mul (right)

    static NodePtr literal(Rational v) {
        return std::make_shared<Node>(Node{Kind::Literal, std::move(v), 0, nullptr, nullptr});
    }
    static NodePtr basis(int k) {
        return std::make_shared<Node>(Node{Kind::Basis, Rational(0), k, nullptr, nullptr});
    }
    static NodePtr neg(NodePtr child) {
        return std::make_shared<Node>(
            Node{Kind::Neg, Rational(0), 0, std::move(child), nullptr});
    }
    static NodePtr binary(Kind kind, NodePtr l, NodePtr r) {
        return std::make_shared<Node>(
            Node{kind, Rational(0), 0, std::move(l), std::move(r)});
    }
};

namespace detail {

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    NodePtr parse() {
        NodePtr root = parse_expr();
        skip_spaces();
        if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
        return root;
    }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_spaces() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(char c) {
        skip_spaces();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_spaces();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    NodePtr parse_expr() {
        NodePtr node = parse_term();
        while (true) {
            if (eat('+')) {
                node = Node::binary(Node::Kind::Add, node, parse_term());
            } else if (eat('-')) {
                node = Node::binary(Node::Kind::Sub, node, parse_term());
            } else {
                return node;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr node = parse_factor();
        while (eat('*')) node = Node::binary(Node::Kind::Mul, node, parse_factor());
        return node;
    }

    NodePtr parse_factor() {
        skip_spaces();
        if (pos_ >= text_.size()) throw parse_error("expected a factor, found end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr();
            if (!eat(')')) throw parse_error("expected ')'", pos_);
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return Node::neg(parse_factor());
        }
        if (c == 'e') {
            std::size_t at = pos_;
            ++pos_;
            if (pos_ >= text_.size() || text_[pos_] < '1' || text_[pos_] > '7') {
                throw parse_error("basis symbol must be e1..e7", at);
            }
            int k = text_[pos_] - '0';
            ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                throw parse_error("basis symbol must be e1..e7", at);
            }
            return Node::basis(k);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = parse_integer();
            if (eat('/')) {
                std::size_t at = pos_;
                skip_spaces();
                if (pos_ >= text_.size() ||
                    !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    throw parse_error("expected a denominator", at);
                }
                Integer den = parse_integer();
                if (den == 0) throw parse_error("denominator must be positive", at);
                return Node::literal(Rational(num, den));
            }
            return Node::literal(Rational(num));
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    Integer parse_integer() {
        skip_spaces();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return Integer(text_.substr(start, pos_ - start));
    }
};

}  // namespace detail

inline NodePtr parse(const std::string& text) { return detail::Parser(text).parse(); }

// Canonical rendering: binary nodes fully parenthesized, negation prefixed.
// parse(print(t)) is structurally identical to t for parser-produced trees.
inline std::string print(const NodePtr& node) {
    switch (node->kind) {
        case Node::Kind::Literal:
            return to_string(node->value);
        case Node::Kind::Basis:
            return "e" + std::to_string(node->basis_index);
        case Node::Kind::Neg:
            return "-" + print(node->lhs);
        case Node::Kind::Add:
            return "(" + print(node->lhs) + " + " + print(node->rhs) + ")";
        case Node::Kind::Sub:
            return "(" + print(node->lhs) + " - " + print(node->rhs) + ")";
        case Node::Kind::Mul:
            return "(" + print(node->lhs) + "*" + print(node->rhs) + ")";
    }
    throw std::logic_error("print: unknown node kind");
}

inline bool equal(const NodePtr& x, const NodePtr& y) {
    if (x->kind != y->kind) return false;
    switch (x->kind) {
        case Node::Kind::Literal:
            return x->value == y->value;
        case Node::Kind::Basis:
            return x->basis_index == y->basis_index;
        case Node::Kind::Neg:
            return equal(x->lhs, y->lhs);
        case Node::Kind::Add:
        case Node::Kind::Sub:
        case Node::Kind::Mul:
            return equal(x->lhs, y->lhs) && equal(x->rhs, y->rhs);
    }
    return false;
}

inline Octonion evaluate(const NodePtr& node, const AlgebraParams& algebra) {
    switch (node->kind) {
        case Node::Kind::Literal:
            return Octonion::scalar(node->value, algebra);
        case Node::Kind::Basis:
            return Octonion::basis(node->basis_index, algebra);
        case Node::Kind::Neg:
            return Rational(-1) * evaluate(node->lhs, algebra);
        case Node::Kind::Add:
            return evaluate(node->lhs, algebra) + evaluate(node->rhs, algebra);
        case Node::Kind::Sub:
            return evaluate(node->lhs, algebra) - evaluate(node->rhs, algebra);
        case Node::Kind::Mul:
            return mul(evaluate(node->lhs, algebra), evaluate(node->rhs, algebra));
    }
    throw std::logic_error("evaluate: unknown node kind");
}

}  // namespace octaudit::expr
