#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tricover/arith.hpp"
#include "tricover/cohom.hpp"

namespace tricover {

// Grammar (whitespace between tokens is ignored):
//
//   expr     := term (('+' | '-') term)*
//   term     := factor (('*' factor) | ('/' posint))*
//   factor   := atom ('^' nat)?
//   atom     := int | 'x' | 'theta' | 'bn1' '(' int ')' | '(' expr ')'
//   int      := '-'? digits
//
// "p/q" literals fall out of term. Operators are left-associative, with '^'
// over '*' and '/' over '+' and '-'.

struct ExprNode {
  enum class Kind { kInteger, kX, kTheta, kBn1, kAdd, kSub, kMul, kDiv, kPow };

  Kind kind;
  std::size_t position;  // 1-based offset of the node's leading token
  BigInt value;          // literal, divisor, exponent, or bn1 index
  std::shared_ptr<const ExprNode> lhs;
  std::shared_ptr<const ExprNode> rhs;
};

// Parsed syntax tree, independent of any ambient (g, d).
class ClassExpr {
 public:
  explicit ClassExpr(std::shared_ptr<const ExprNode> root) : root_(std::move(root)) {}
  const ExprNode& root() const { return *root_; }

 private:
  std::shared_ptr<const ExprNode> root_;
};

// Throws ParseError (kSyntax, kDivisionByZero, kBadExponent).
ClassExpr parse_expr(std::string_view text);

// Evaluates in (g, d). bn1(k) requires k == d (ParseError kBn1Mismatch).
// When `notes` is non-null, every monomial annihilated by truncation is
// recorded there.
CohomClass evaluate(const ClassExpr& expr, long g, long d, std::vector<std::string>* notes = nullptr);

CohomClass parse(std::string_view text, long g, long d, std::vector<std::string>* notes = nullptr);

// Canonical text: terms by descending theta power then descending x power,
// reduced-fraction coefficients, "0" for the zero class. parse(format(c))
// reproduces c in c's ambient.
std::string format(const CohomClass& c);

}  // namespace tricover
