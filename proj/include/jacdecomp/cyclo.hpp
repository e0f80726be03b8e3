#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jacdecomp/rational.hpp"

namespace jacdecomp {

/// Element of Q(zeta_n) in the power basis 1, z, ..., z^{phi(n)-1} reduced modulo Phi_n.
/// Binary operations first embed both operands into the lcm of their conductors.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(const Rational& q);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long q) : Cyclotomic(Rational(q)) {}  // NOLINT(google-explicit-constructor)

  /// zeta_n^k.
  static Cyclotomic zeta(std::uint64_t n, long k = 1);
  /// Sum of c_j zeta_n^j for j = 0..c.size()-1 (any length).
  static Cyclotomic from_powers(std::uint64_t n, const RationalVector& c);
  /// Takes already-reduced coordinates; throws if the length is not phi(n).
  static Cyclotomic from_coeffs(std::uint64_t n, RationalVector coeffs);

  std::uint64_t conductor() const { return n_; }
  const RationalVector& coeffs() const { return c_; }

  Cyclotomic embed(std::uint64_t big_n) const;

  Cyclotomic operator+(const Cyclotomic& b) const;
  Cyclotomic operator-(const Cyclotomic& b) const;
  Cyclotomic operator*(const Cyclotomic& b) const;
  Cyclotomic operator-() const;
  Cyclotomic scaled(const Rational& q) const;
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
  bool operator==(const Cyclotomic& b) const;

  /// Image under zeta -> zeta^k; throws UsageError unless gcd(k, n) = 1.
  Cyclotomic galois(long k) const;
  Cyclotomic conj() const { return galois(-1); }

  bool is_zero() const;
  std::optional<Rational> is_rational() const;
  std::complex<double> to_complex() const;

  /// Power-basis expansion such as "-1 - z^2 + z^3 (z = zeta_10)".
  std::string to_string() const;

 private:
  std::uint64_t n_ = 1;
  RationalVector c_;
};

std::uint64_t euler_phi(std::uint64_t n);

/// Trace to Q of a over the subfield K generated by `generators`. Throws UsageError if a is not in K.
Rational trace_over(const Cyclotomic& a, const std::vector<Cyclotomic>& generators);

}  // namespace jacdecomp
