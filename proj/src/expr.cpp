#include "ffmfg/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ffmfg {

namespace detail {

struct ExprNode {
  enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Neg, Sin, Cos, Exp };

  Kind kind;
  double value = 0.0;
  std::shared_ptr<const ExprNode> a;
  std::shared_ptr<const ExprNode> b;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;
using Kind = ExprNode::Kind;

NodePtr constant(double value) {
  return std::make_shared<ExprNode>(ExprNode{Kind::Constant, value, nullptr, nullptr});
}

NodePtr variable() {
  return std::make_shared<ExprNode>(ExprNode{Kind::Variable, 0.0, nullptr, nullptr});
}

bool is_constant(const NodePtr& node, double value) {
  return node->kind == Kind::Constant && node->value == value;
}

NodePtr binary(Kind kind, NodePtr a, NodePtr b) {
  if (a->kind == Kind::Constant && b->kind == Kind::Constant) {
    switch (kind) {
      case Kind::Add: return constant(a->value + b->value);
      case Kind::Sub: return constant(a->value - b->value);
      case Kind::Mul: return constant(a->value * b->value);
      case Kind::Div: return constant(a->value / b->value);
      default: break;
    }
  }
  if (kind == Kind::Add) {
    if (is_constant(a, 0.0)) return b;
    if (is_constant(b, 0.0)) return a;
  }
  if (kind == Kind::Sub && is_constant(b, 0.0)) return a;
  if (kind == Kind::Mul) {
    if (is_constant(a, 0.0) || is_constant(b, 0.0)) return constant(0.0);
    if (is_constant(a, 1.0)) return b;
    if (is_constant(b, 1.0)) return a;
  }
  if (kind == Kind::Div && is_constant(b, 1.0)) return a;
  return std::make_shared<ExprNode>(ExprNode{kind, 0.0, std::move(a), std::move(b)});
}

NodePtr unary(Kind kind, NodePtr a) {
  if (kind == Kind::Neg && a->kind == Kind::Constant) return constant(-a->value);
  return std::make_shared<ExprNode>(ExprNode{kind, 0.0, std::move(a), nullptr});
}

double eval(const ExprNode& node, double x) {
  switch (node.kind) {
    case Kind::Constant: return node.value;
    case Kind::Variable: return x;
    case Kind::Add: return eval(*node.a, x) + eval(*node.b, x);
    case Kind::Sub: return eval(*node.a, x) - eval(*node.b, x);
    case Kind::Mul: return eval(*node.a, x) * eval(*node.b, x);
    case Kind::Div: return eval(*node.a, x) / eval(*node.b, x);
    case Kind::Neg: return -eval(*node.a, x);
    case Kind::Sin: return std::sin(eval(*node.a, x));
    case Kind::Cos: return std::cos(eval(*node.a, x));
    case Kind::Exp: return std::exp(eval(*node.a, x));
  }
  throw std::logic_error("eval: unknown node");
}

NodePtr differentiate(const NodePtr& node) {
  switch (node->kind) {
    case Kind::Constant: return constant(0.0);
    case Kind::Variable: return constant(1.0);
    case Kind::Add: return binary(Kind::Add, differentiate(node->a), differentiate(node->b));
    case Kind::Sub: return binary(Kind::Sub, differentiate(node->a), differentiate(node->b));
    case Kind::Mul:
      return binary(Kind::Add, binary(Kind::Mul, differentiate(node->a), node->b),
                    binary(Kind::Mul, node->a, differentiate(node->b)));
    case Kind::Div:
      return binary(Kind::Div,
                    binary(Kind::Sub, binary(Kind::Mul, differentiate(node->a), node->b),
                           binary(Kind::Mul, node->a, differentiate(node->b))),
                    binary(Kind::Mul, node->b, node->b));
    case Kind::Neg: return unary(Kind::Neg, differentiate(node->a));
    case Kind::Sin:
      return binary(Kind::Mul, unary(Kind::Cos, node->a), differentiate(node->a));
    case Kind::Cos:
      return binary(Kind::Mul, unary(Kind::Neg, unary(Kind::Sin, node->a)),
                    differentiate(node->a));
    case Kind::Exp:
      return binary(Kind::Mul, unary(Kind::Exp, node->a), differentiate(node->a));
  }
  throw std::logic_error("differentiate: unknown node");
}

class Parser {
public:
  Parser(std::string_view text, std::mt19937_64* rng) : text_(text), rng_(rng) {}

  NodePtr parse() {
    NodePtr node = parse_expression();
    skip_spaces();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return node;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression error at position " + std::to_string(pos_ + 1) +
                                ": " + what);
  }

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
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

  NodePtr parse_expression() {
    NodePtr node = parse_term();
    for (;;) {
      if (consume('+')) {
        node = binary(Kind::Add, node, parse_term());
      } else if (consume('-')) {
        node = binary(Kind::Sub, node, parse_term());
      } else {
        return node;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr node = parse_unary();
    for (;;) {
      if (consume('*')) {
        node = binary(Kind::Mul, node, parse_unary());
      } else if (consume('/')) {
        node = binary(Kind::Div, node, parse_unary());
      } else {
        return node;
      }
    }
  }

  NodePtr parse_unary() {
    if (consume('-')) return unary(Kind::Neg, parse_unary());
    if (consume('+')) return parse_unary();
    return parse_primary();
  }

  NodePtr parse_primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr node = parse_expression();
      if (!consume(')')) fail("expected ')'");
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
    if (c == '\0') fail("unexpected end of expression");
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr parse_number() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("malformed number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return constant(value);
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);

    if (name == "x") return variable();
    if (name == "pi") return constant(std::numbers::pi);
    if (name == "sin" || name == "cos" || name == "exp") {
      if (!consume('(')) fail("expected '(' after function name");
      NodePtr arg = parse_expression();
      if (!consume(')')) fail("expected ')'");
      const Kind kind = name == "sin" ? Kind::Sin : name == "cos" ? Kind::Cos : Kind::Exp;
      return unary(kind, std::move(arg));
    }
    if (name == "randomtrig") return parse_randomtrig();
    fail("unknown identifier '" + std::string(name) + "'");
  }

  NodePtr parse_randomtrig() {
    if (rng_ == nullptr) fail("randomtrig is not allowed in this context");
    if (!consume('(')) fail("expected '(' after randomtrig");
    skip_spaces();
    unsigned long k = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(begin, end, k);
    if (ec != std::errc() || ptr == begin) fail("randomtrig expects a positive integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    if (!consume(')')) fail("expected ')'");
    if (k < 1 || k > 64) fail("randomtrig order must lie in [1, 64]");

    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<std::pair<double, double>> coefficients(k);
    double total = 0.0;
    for (auto& [a, b] : coefficients) {
      a = uniform(*rng_);
      b = uniform(*rng_);
      total += std::abs(a) + std::abs(b);
    }
    if (total <= 0.0) return constant(0.0);

    NodePtr sum = constant(0.0);
    const double two_pi = 2.0 * std::numbers::pi;
    for (unsigned long j = 1; j <= k; ++j) {
      const auto [a, b] = coefficients[j - 1];
      NodePtr phase = binary(Kind::Mul, constant(two_pi * static_cast<double>(j)), variable());
      sum = binary(Kind::Add, sum,
                   binary(Kind::Add,
                          binary(Kind::Mul, constant(a / total), unary(Kind::Cos, phase)),
                          binary(Kind::Mul, constant(b / total), unary(Kind::Sin, phase))));
    }
    return sum;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::mt19937_64* rng_;
};

}  // namespace

}  // namespace detail

Expr Expr::parse(std::string_view text, std::mt19937_64& rng) {
  detail::Parser parser(text, &rng);
  return Expr(parser.parse());
}

Expr Expr::parse_deterministic(std::string_view text) {
  detail::Parser parser(text, nullptr);
  return Expr(parser.parse());
}

double Expr::operator()(double x) const {
  if (!root_) throw std::logic_error("Expr: evaluating an empty expression");
  return detail::eval(*root_, x);
}

Expr Expr::derivative() const {
  if (!root_) throw std::logic_error("Expr: differentiating an empty expression");
  return Expr(detail::differentiate(root_));
}

}  // namespace ffmfg
