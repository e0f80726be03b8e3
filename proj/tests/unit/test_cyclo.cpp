#include <doctest.h>

#include <cmath>
#include <numbers>

#include "jacdecomp/cyclo.hpp"
#include "jacdecomp/error.hpp"

using namespace jacdecomp;

TEST_CASE("roots of unity") {
  CHECK(Cyclotomic::zeta(4) * Cyclotomic::zeta(4) == Cyclotomic(-1));
  Cyclotomic sum;
  for (long k = 1; k <= 4; ++k) sum += Cyclotomic::zeta(5, k);
  CHECK(sum == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta(6, 6) == Cyclotomic(1));
  CHECK(Cyclotomic::zeta(6, 3) == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta(12, 4) == Cyclotomic::zeta(3));
}

TEST_CASE("Galois action") {
  CHECK(Cyclotomic::zeta(5).galois(2) == Cyclotomic::zeta(5, 2));
  CHECK(Cyclotomic::zeta(7).conj() == Cyclotomic::zeta(7, 6));
  CHECK_THROWS_AS(Cyclotomic::zeta(6).galois(2), UsageError);
}

TEST_CASE("trace over a subfield") {
  const Cyclotomic eta = Cyclotomic::zeta(7) + Cyclotomic::zeta(7, -1);
  CHECK(trace_over(eta, {eta}) == Rational(-1));
  CHECK(trace_over(Cyclotomic(3), {}) == Rational(3));
  const Cyclotomic i = Cyclotomic::zeta(4);
  CHECK(trace_over(i, {i}) == Rational(0));
  CHECK(trace_over(i * i, {i}) == Rational(-2));
}

TEST_CASE("complex embedding") {
  const auto z = Cyclotomic::zeta(8).to_complex();
  CHECK(std::abs(z - std::polar(1.0, std::numbers::pi / 4)) < 1e-12);
  const auto w = (Cyclotomic::zeta(5) + Cyclotomic::zeta(5, 4)).to_complex();
  CHECK(std::abs(w.real() - 2 * std::cos(2 * std::numbers::pi / 5)) < 1e-12);
}

TEST_CASE("mixed conductors and rationality") {
  const Cyclotomic a = Cyclotomic::zeta(3) + Cyclotomic::zeta(4);
  const Cyclotomic b = a - Cyclotomic::zeta(4);
  CHECK(b == Cyclotomic::zeta(3));
  CHECK_FALSE(a.is_rational());
  const auto q = (Cyclotomic::zeta(3) + Cyclotomic::zeta(3, 2)).is_rational();
  REQUIRE(q);
  CHECK(*q == Rational(-1));
  CHECK((a - a).is_zero());
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("text rendering") {
  CHECK(Cyclotomic(ratio(-3, 2)).to_string() == "-3/2");
  CHECK(Cyclotomic::zeta(5).to_string() == "z (z = zeta_5)");
}
