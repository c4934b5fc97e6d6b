#pragma once

#include <memory>
#include <string>

#include "riordan/series.hpp"

namespace riordan {

/*
 * Closed-form rational generating-function expressions.
 * Grammar (whitespace-insensitive, no implicit multiplication):
 *   expr   := term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := atom ('^' int)?
 *   atom   := integer | 'x' | '-' atom | '(' expr ')'
 * Exponents are limited to |k| <= 64.
 */
struct GfExpr {
    enum class Kind { Literal, Var, Neg, Add, Sub, Mul, Div, Pow, Group };

    Kind kind;
    Rat literal;                     // Literal
    long exponent = 0;               // Pow
    std::shared_ptr<const GfExpr> a; // unary child / left operand
    std::shared_ptr<const GfExpr> b; // right operand
};

using GfPtr = std::shared_ptr<const GfExpr>;

GfPtr gf_literal(Rat value);
GfPtr gf_var();
GfPtr gf_neg(GfPtr a);
GfPtr gf_add(GfPtr a, GfPtr b);
GfPtr gf_sub(GfPtr a, GfPtr b);
GfPtr gf_mul(GfPtr a, GfPtr b);
GfPtr gf_div(GfPtr a, GfPtr b);
GfPtr gf_pow(GfPtr a, long exponent);
GfPtr gf_group(GfPtr a);

// Throws ParseError with a 0-based character offset.
GfPtr parse(const std::string& text);

// Canonical printer; parse(render(e)) evaluates identically to e.
std::string render(const GfExpr& e);

/*
 * Evaluate to a Series truncated at N. The expression is evaluated exactly
 * as a fraction of polynomials and expanded once at the end, so division is
 * legal whenever the quotient is a genuine power series: unit denominators,
 * and valuation-cancelling quotients like x/(x+x^2). A quotient or negative
 * power with a pole at zero is rejected.
 */
Series eval(const GfExpr& e, int trunc_order);

inline Series eval(const std::string& text, int trunc_order) { return eval(*parse(text), trunc_order); }

}  // namespace riordan
