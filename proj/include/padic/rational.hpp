#pragma once

#include <gmpxx.h>

#include <string>

namespace padic {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical rendering: "num/den" with "/den" omitted when den == 1.
std::string rat_to_string(const Rat& x);

// Inverse of rat_to_string; accepts any "a" or "a/b" with b != 0.
// Throws parse_error on malformed input.
Rat rat_from_string(const std::string& text);

// base^exp over Q; exp may be negative (then base must be nonzero).
Rat rat_pow(const Rat& base, long exp);

} // namespace padic
