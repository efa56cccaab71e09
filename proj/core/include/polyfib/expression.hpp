#ifndef POLYFIB_EXPRESSION_HPP
#define POLYFIB_EXPRESSION_HPP

// A small arithmetic language for closed-form constants in the identity
// registry, evaluated over Complex at a requested precision.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' unary)?          integer exponents only
//   primary := number | name | name '(' args ')' | '(' expr ')'
//
// Names: pi, alpha, beta, sqrt5, i. Functions: log, exp, sqrt, atan, cos,
// sin, zeta(n), F(n), L(n), Li(k, x), LiLower(k, x), LiExp(k, x).
// Li goes through the dispatcher, LiLower takes real x > 1 from below the
// cut, and LiExp forces the log-expansion path.

#include <string_view>

#include "polyfib/real.hpp"

namespace polyfib {

/// Throws DomainError on syntax errors and unknown names.
Complex evaluate_expression(std::string_view text, Bits prec);

/// Real part of evaluate_expression; DomainError if the imaginary part is
/// not negligible.
Real evaluate_real_expression(std::string_view text, Bits prec);

/// True when the text calls one of the polylog functions.
bool expression_uses_polylog(std::string_view text);
/// True when the text calls LiExp.
bool expression_uses_log_expansion(std::string_view text);

}  // namespace polyfib

#endif  // POLYFIB_EXPRESSION_HPP
