#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "cxs/errors.hpp"

namespace cxs {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// Canonical wire form of an exact rational: reduced "p/q", or just "p" when
// the denominator is 1.
inline std::string rational_to_string(const Rational& q) { return q.str(); }

inline std::string bigint_to_string(const BigInt& n) { return n.str(); }

// Parses "p", "p/q", or "-p/q". Rejects anything else (floats in particular).
Rational parse_rational(const std::string& text);

// Least integer >= q.
BigInt ceil_rational(const Rational& q);

}  // namespace cxs
