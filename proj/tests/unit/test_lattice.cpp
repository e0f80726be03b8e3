#include <doctest.h>

#include "jacdecomp/error.hpp"
#include "jacdecomp/lattice.hpp"

using namespace jacdecomp;

namespace {

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

TEST_CASE("Smith normal form") {
  const auto a = int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const auto s = smith_normal_form(a);
  CHECK(s.u * a * s.v == s.d);
  CHECK(s.u * s.u_inv == IntMatrix::identity(3));
  CHECK(s.invariant_factors() == std::vector<Integer>{2, 6, 12});
  CHECK(s.rank == 3);
  const auto z = smith_normal_form(int_matrix({{1, 2}, {2, 4}}));
  CHECK(z.rank == 1);
  CHECK(z.invariant_factors() == std::vector<Integer>{1});
}

TEST_CASE("Hermite basis, saturation, determinant") {
  const auto a = int_matrix({{2, 0}, {0, 2}, {2, 2}});
  const auto h = hermite_basis(a);
  CHECK(h.cols() == 2);
  CHECK(hermite_basis(h) == h);
  const auto sat = saturate(int_matrix({{2}, {4}}));
  CHECK(sat == int_matrix({{1}, {2}}));
  CHECK(determinant(int_matrix({{2, 1}, {1, 1}})) == 1);
  CHECK(determinant(int_matrix({{0, 3, 1}, {2, 0, 0}, {0, 0, 5}})) == -30);
  CHECK(hermite_basis(int_matrix({{0}, {0}})).cols() == 0);
}

TEST_CASE("lattice construction validates the action") {
  const auto g = parse_group_spec("Z:2");
  auto swap = int_matrix({{0, 1}, {1, 0}});
  CHECK(make_lattice(g, 2, {swap}).elements.size() == 2);
  CHECK_THROWS_AS(make_lattice(g, 2, {int_matrix({{2, 0}, {0, 1}})}), InvariantError);
  CHECK_THROWS_AS(make_lattice(g, 2, {int_matrix({{0, -1}, {1, 0}})}), InvariantError);
  CHECK(regular_lattice(parse_group_spec("Z:1")).rank == 1);
}

TEST_CASE("isotypical certificate on Z[S3]") {
  const auto g = parse_group_spec("S:3");
  const auto a = analyze_algebra(character_table(g), 7);
  const auto lattice = regular_lattice(g);
  const auto cert = isotypical_sublattices(lattice, a.central);
  CHECK(cert.ranks == std::vector<std::size_t>{1, 1, 4});
  CHECK(cert.index != 0);
  CHECK(hom_vanishing_check(lattice, cert, 0, 2));
  CHECK(hom_vanishing_check(lattice, cert, 2, 1));
  CHECK_THROWS_AS(hom_vanishing_check(lattice, cert, 1, 1), UsageError);
  CHECK(hom_dimension(lattice, cert.bases[2], cert.bases[2]) == 4);
  const auto prim = primitive_sublattices(lattice, a.orbits[2].decomposition);
  CHECK(prim.ranks == std::vector<std::size_t>{2, 2});
  CHECK(prim.isotypical_rank == 4);
}

TEST_CASE("permutation lattice on cosets") {
  const auto g = parse_group_spec("S:4");
  const auto d4 = parse_subgroup_spec(*g, "D4");
  const auto lattice = permutation_lattice(g, d4);
  CHECK(lattice.rank == 3);
  const auto a = analyze_algebra(character_table(g), 7, false);
  const auto cert = isotypical_sublattices(lattice, a.central);
  // Z[G/D4] (x) Q = trivial + W.
  CHECK(cert.ranks == std::vector<std::size_t>{1, 0, 2, 0, 0});
  CHECK(cert.index == 3);
}

TEST_CASE("restricted action is a representation") {
  const auto g = parse_group_spec("D:5");
  const auto a = analyze_algebra(character_table(g), 7, false);
  const auto lattice = regular_lattice(g);
  const auto cert = isotypical_sublattices(lattice, a.central);
  const auto mats = restricted_action(lattice, cert.bases[2]);
  REQUIRE(mats.size() == 2);
  const auto& r = mats[0];
  const auto& s = mats[1];
  CHECK(s * s == RatMatrix::identity(8));
  CHECK(s * r * s * r == RatMatrix::identity(8));
}
