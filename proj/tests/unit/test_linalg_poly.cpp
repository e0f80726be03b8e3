#include <doctest.h>

#include <algorithm>

#include "jacdecomp/linalg.hpp"
#include "jacdecomp/poly.hpp"

using namespace jacdecomp;

namespace {
RatMatrix mat(std::vector<RationalVector> rows) {
  const std::size_t cols = rows.front().size();
  return RatMatrix::from_rows(rows, cols);
}
}  // namespace

TEST_CASE("rank, nullspace, solve, inverse") {
  const auto m = mat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(m.apply(ns[0]) == RationalVector{0, 0, 0});
  const auto x = solve(m, {2, 4, 0});
  REQUIRE(x);
  CHECK(m.apply(*x) == RationalVector{2, 4, 0});
  CHECK_FALSE(solve(m, {1, 0, 0}));
  const auto a = mat({{2, 1}, {1, 1}});
  CHECK(a * inverse(a) == RatMatrix::identity(2));
  CHECK(determinant(a) == Rational(1));
}

TEST_CASE("rational span") {
  RationalSpan span(3);
  CHECK(span.insert({1, 1, 0}));
  CHECK(span.insert({0, 1, 1}));
  CHECK_FALSE(span.insert({1, 2, 1}));
  CHECK(span.contains({2, 3, 1}));
  CHECK_FALSE(span.contains({0, 0, 1}));
  const RationalVector v{1, 0, -1};
  CHECK(span.combine(span.coordinates(v)) == v);
}

TEST_CASE("polynomials") {
  CHECK(cyclotomic_polynomial(6) == QPoly({1, -1, 1}));
  CHECK(cyclotomic_polynomial(5).degree() == 4);
  const QPoly p = QPoly::x_minus(2) * QPoly::x_minus(2) * QPoly::x_minus(ratio(1, 3));
  CHECK(squarefree_part(p) == (QPoly::x_minus(2) * QPoly::x_minus(ratio(1, 3))).monic());
  auto roots = rational_roots(p);
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<Rational>{ratio(1, 3), 2});
  const auto [q, r] = divmod(p, QPoly::x_minus(2));
  CHECK(r.is_zero());
  CHECK(q * QPoly::x_minus(2) == p);
}

TEST_CASE("minimal polynomial annihilates the matrix") {
  const auto m = mat({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}});
  const auto mp = minimal_polynomial(m);
  CHECK(mp.degree() == 3);
  CHECK(evaluate(mp, m).is_zero());
  CHECK(minimal_polynomial(RatMatrix::identity(3)) == QPoly::x_minus(1));
}
