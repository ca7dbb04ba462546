#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "izeta/errors.hpp"

namespace izeta {

// Exact arithmetic backend. cpp_rational keeps values reduced with a
// positive denominator, which is exactly the invariant we need.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

inline std::string to_string(const Int& n) { return n.str(); }

inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

// Parses "a" or "a/b" with optional leading '-'. b must be positive.
Rational rational_from_string(const std::string& text);

inline Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

}  // namespace izeta
