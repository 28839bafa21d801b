#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "adictop/ground.hpp"
#include "adictop/multipoly.hpp"
#include "adictop/polynomial.hpp"

namespace adictop {

// Small recursive-descent expression parser shared by the CLI, the
// certificate verifier, and every text format in this project.
//
// Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/')? factor)*      -- juxtaposition multiplies
//   factor := base ('^' integer)?
//   base   := integer | identifier | '(' expr ')'
//
// so "3/2", "1+t", "x(x-1)", "X^2-(1+t)" all parse.

struct ExprNode {
    enum class Kind { Number, Var, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind;
    Int number;        // Kind::Number
    std::string var;   // Kind::Var
    long exponent = 0; // Kind::Pow
    std::vector<std::shared_ptr<ExprNode>> children;
};

using ExprPtr = std::shared_ptr<ExprNode>;

// Parse the full string; trailing garbage is a ParseError.
ExprPtr parse_expression(const std::string& text);

// Evaluate with every identifier resolved through env (missing -> ParseError).
Ground eval_ground(const ExprPtr& e, const std::map<std::string, Ground>& env);

// Element of Q: identifiers are rejected.
Rat parse_rational(const std::string& text);

// Element of Q(t): the identifier "t" is the indeterminate.
RatFunc parse_ratfunc(const std::string& text, const std::string& var = "t");

// Element of the given field.
Ground parse_ground(const std::string& text, Field field);

// "t^2-2*t+1" as a Poly in the named variable; division by nonconstants is
// rejected.
Poly parse_poly(const std::string& text, const std::string& var = "t");

// Univariate polynomial in `main_var` whose coefficients live in `field`
// (for Field::Qt the identifier "t" is the coefficient indeterminate).
// Returned ascending in main_var.
std::vector<Ground> parse_poly_over_ground(const std::string& text,
                                           const std::string& main_var, Field field);

// Multivariate polynomial with the given variable names; coefficients in
// `field`.
MultiPoly parse_multipoly(const std::string& text, const std::vector<std::string>& names,
                          Field field);

}  // namespace adictop
