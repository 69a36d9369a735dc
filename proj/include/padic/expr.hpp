#pragma once

#include "padic/ratfunc.hpp"

#include <cstddef>
#include <string>

namespace padic {

// Grammar: integer literals, the variable T, operators + - * / ^ and
// parentheses; whitespace-insensitive; '^' takes a nonnegative integer
// exponent and binds tightest, unary minus is allowed.  Division produces
// a rational function.  Throws parse_error with a byte offset.
RatFunc parse_poly_expr(const std::string& text, const PrimeContext& ctx,
                        std::size_t max_degree = 4096);

// Requires a polynomial (denominator 1); throws domain_error otherwise.
Poly require_polynomial(const RatFunc& f);

// Render with ascending powers of T; parse_poly_expr(render(f)) == f.
std::string render_poly(const Poly& f);

} // namespace padic
