#pragma once

#include <vector>

#include "jacdecomp/linalg.hpp"
#include "jacdecomp/rational.hpp"

namespace jacdecomp {

/// Univariate polynomial over Q, coefficients low degree first, no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(RationalVector coeffs);
  static QPoly x_minus(const Rational& root);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const RationalVector& coeffs() const { return c_; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  QPoly operator+(const QPoly& b) const;
  QPoly operator-(const QPoly& b) const;
  QPoly operator*(const QPoly& b) const;
  bool operator==(const QPoly& b) const = default;

  QPoly monic() const;
  QPoly derivative() const;
  Rational operator()(const Rational& x) const;

 private:
  void trim();
  RationalVector c_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd (zero if both are zero).
QPoly gcd(QPoly a, QPoly b);
/// Product of the distinct irreducible factors, monic.
QPoly squarefree_part(const QPoly& p);
std::vector<Rational> rational_roots(const QPoly& p);
/// n-th cyclotomic polynomial.
QPoly cyclotomic_polynomial(unsigned n);

/// Monic minimal polynomial of a square matrix.
QPoly minimal_polynomial(const RatMatrix& m);
RatMatrix evaluate(const QPoly& p, const RatMatrix& m);

}  // namespace jacdecomp
