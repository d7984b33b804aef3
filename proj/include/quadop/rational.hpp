#pragma once

#include <gmpxx.h>

#include <string>

namespace quadop {

// Exact rational scalar. GMP keeps values canonical: lowest terms,
// positive denominator, zero stored as 0/1.
using Rat = mpq_class;
using Int = mpz_class;

// Accepts "p" or "p/q" with optional leading sign; q must be a positive
// integer literal. Throws parse_error otherwise.
Rat parse_rational(const std::string& text);

// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string rat_str(const Rat& r);

bool is_nonnegative_integer(const Rat& r);

}  // namespace quadop
