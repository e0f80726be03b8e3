#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace jacdecomp {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "a" or "a/b"; throws UsageError on malformed text.
Rational parse_rational(const std::string& text);

/// Canonicalized num/den.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer lcm(const Integer& a, const Integer& b);

}  // namespace jacdecomp
