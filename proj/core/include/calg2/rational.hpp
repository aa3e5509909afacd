#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace calg2 {

// Always canonical: gmpxx arithmetic keeps results in lowest terms.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "n" or "n/d" with an optional leading sign.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline int sign(const Rational& q) { return sgn(q); }

}  // namespace calg2
