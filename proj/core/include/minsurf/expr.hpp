// A small closed-form expression language over variables x1, x2, ...:
//   expr  := term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' unary)?      exponent must fold to a constant
//   atom  := number | variable | fn '(' expr (',' expr)? ')' | '(' expr ')'
// with fn in {sin, cos, tan, atan, atan2, exp, log, sqrt}. Parsed trees
// evaluate to exact second-order jets and print back to parseable text.
#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minsurf/field.hpp"
#include "minsurf/jet.hpp"

namespace minsurf {

struct ParseError : std::runtime_error {
  ParseError(std::size_t offset, std::string expected, std::string found);

  std::size_t offset;
  std::string expected;
  std::string found;
};

enum class ExprOp { number, variable, add, sub, mul, div, neg, pow, call };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  ExprOp op{};
  double value = 0.0;  // number payload; for pow, the folded exponent
  int var = -1;        // 0-based variable index
  std::string fn;      // call target
  std::vector<ExprPtr> args;
};

ExprPtr parse_expression(std::string_view text);

// 1 + highest variable index used (1 for pure constants).
int min_dimension(const ExprPtr& e);

// Canonical text form; parse(pretty_print(e)) rebuilds the same tree.
std::string pretty_print(const ExprPtr& e);

Jet2 eval_expression(const ExprPtr& e, std::span<const double> x);

// true when the point is too close to a pole, branch point or other locus
// where the jet is undefined or numerically untrustworthy.
bool expression_excluded(const ExprPtr& e, std::span<const double> x);

// Wrap a parsed tree as a scalar field on R^dim (dim >= min_dimension).
// An empty name defaults to "expr:" + pretty_print(e).
ScalarField expression_field(const ExprPtr& e, int dim, std::string name = "");

// Parse and wrap in one step; dim = -1 uses min_dimension.
ScalarField expression_field(std::string_view text, int dim = -1);

}  // namespace minsurf
