#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace zonoforge {

// Exact rational scalar. GMP keeps every value canonical (reduced, positive
// denominator, zero as 0/1).
using Rat = mpq_class;
using Vec = std::vector<Rat>;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);

// Accepts "p", "-p", "p/q"; throws Error(kParse) on malformed input or a zero
// denominator.
Rat parse_rat(std::string_view text);

bool is_integer(const Rat& r);

Rat dot(const Vec& a, const Vec& b);

bool is_zero(const Vec& v);

// Scales v to a primitive integer vector whose first nonzero entry is positive.
Vec primitive_integer(const Vec& v);

}  // namespace zonoforge
