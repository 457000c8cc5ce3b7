#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace hypsurf {

using BigInt = boost::multiprecision::cpp_int;
// cpp_rational keeps itself in lowest terms with a positive denominator.
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Rat& r) { return r.sign(); }
inline int sign_of(const BigInt& n) { return n.sign(); }

// Accepts "p", "-p", "p/q" with optional whitespace around tokens.
Rat parse_rational(const std::string& text);

// Always "n/d" with d >= 1, e.g. "3/1", "-1/2".  Inverse of parse_rational.
std::string format_rational(const Rat& r);

// Trial division; intended for small field discriminants.
bool is_square_free(const BigInt& n);

BigInt floor_div(const BigInt& num, const BigInt& den);

// r - floor(r), always in [0, 1).
Rat frac_part(const Rat& r);

}  // namespace hypsurf
