#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "polycenter/center.hpp"
#include "polycenter/geometry.hpp"

namespace polycenter::dsl {

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := number | 'd' '(' int ',' int ')' | 'sqrt' '(' expr ')'
//           | 'pow' '(' expr ',' int ')' | '(' expr ')' | '-' factor

class Expr {
 public:
  struct Number { double value; };
  struct Distance { int i, j; };  // 1-based vertex labels
  struct Binary { char op; std::shared_ptr<const Expr> lhs, rhs; };
  struct Negate { std::shared_ptr<const Expr> operand; };
  struct Sqrt { std::shared_ptr<const Expr> operand; };
  struct Pow { std::shared_ptr<const Expr> base; int exponent; };
  using Node = std::variant<Number, Distance, Binary, Negate, Sqrt, Pow>;

  explicit Expr(Node node) : node_(std::move(node)) {}
  const Node& node() const noexcept { return node_; }

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  Node node_;
};

using ExprPtr = std::shared_ptr<const Expr>;

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorKind::SyntaxError, message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Throws SyntaxError or Error(IndexOutOfRange).
ExprPtr parse(std::string_view source, std::size_t n);

/// Canonical text; parse(print(e)) is structurally equal to e.
std::string print(const Expr& e);

/// Throws NegativeSqrt or DivisionByZero. Radicands that are negative only
/// by rounding (relative to the size of the cancelled terms) clamp to 0.
double evaluate(const Expr& e, const DistanceMatrix& m);

/// Rewrites every d(i,j) as d(perm(i), perm(j)) (0-based permutation).
ExprPtr permute_indices(const ExprPtr& e, std::span<const std::size_t> perm);

class SymmetryViolation : public Error {
 public:
  SymmetryViolation(Polygon witness, double lhs, double rhs);
  const Polygon& witness() const noexcept { return witness_; }
  double value() const noexcept { return lhs_; }
  double sigma_value() const noexcept { return rhs_; }

 private:
  Polygon witness_;
  double lhs_, rhs_;
};

struct DslCenterFunction {
  std::size_t n = 0;
  ExprPtr expr;
  bool verified_symmetry = false;
  std::optional<int> estimated_degree;
  CenterFunction function;
};

/// Checks the sigma-symmetry on a seeded corpus of n-gons and estimates
/// the homogeneity degree. Throws SymmetryViolation or
/// Error(DegreeInconsistent).
DslCenterFunction compile(const ExprPtr& e, std::size_t n, CenterFunction::Domain domain = {},
                          std::string name = "dsl");

}  // namespace polycenter::dsl
