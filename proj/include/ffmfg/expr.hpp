#pragma once

#include <memory>
#include <random>
#include <string_view>

namespace ffmfg {

namespace detail {
struct ExprNode;
}

/// Immutable arithmetic expression in one variable x, with an exact symbolic
/// derivative. Grammar: numbers, `x`, `pi`, `+ - * /`, unary minus,
/// parentheses, `sin(...)`, `cos(...)`, `exp(...)`, and `randomtrig(k)`.
///
/// `randomtrig(k)` expands at parse time into a random trigonometric
/// polynomial sum_{j=1..k} a_j cos(2 pi j x) + b_j sin(2 pi j x) with
/// coefficients drawn from the supplied generator and rescaled so the sup
/// norm is at most 1; it has zero mean and period 1. Each occurrence
/// consumes exactly 2k draws, so a fixed seed and parse order reproduce the
/// same function.
class Expr {
public:
  Expr() = default;

  /// Parses `text`; throws std::invalid_argument with a description of the
  /// first offending token on malformed input.
  static Expr parse(std::string_view text, std::mt19937_64& rng);

  /// Parses an expression that must not contain randomtrig.
  static Expr parse_deterministic(std::string_view text);

  double operator()(double x) const;
  Expr derivative() const;
  bool valid() const { return root_ != nullptr; }

private:
  explicit Expr(std::shared_ptr<const detail::ExprNode> root) : root_(std::move(root)) {}

  std::shared_ptr<const detail::ExprNode> root_;
};

}  // namespace ffmfg
