#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jacdecomp/chartab.hpp"
#include "jacdecomp/linalg.hpp"
#include "jacdecomp/perm.hpp"

namespace jacdecomp {

/// Sparse element of Q[G]; zero coefficients are never stored.
class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(GroupPtr group) : group_(std::move(group)) {}

  static GroupAlgebraElement one(const GroupPtr& g);
  static GroupAlgebraElement element(const GroupPtr& g, ElementIndex x);
  static GroupAlgebraElement group_sum(const GroupPtr& g);
  /// (1/|H|) sum_{h in H} h.
  static GroupAlgebraElement subgroup_average(const GroupPtr& g, const Subgroup& h);
  static GroupAlgebraElement from_dense(const GroupPtr& g, const RationalVector& v);

  const GroupPtr& group() const { return group_; }
  const std::map<ElementIndex, Rational>& coeffs() const { return c_; }
  Rational coeff(ElementIndex x) const;
  void set(ElementIndex x, const Rational& q);

  RationalVector dense() const;
  bool is_zero() const { return c_.empty(); }

  GroupAlgebraElement operator+(const GroupAlgebraElement& b) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& b) const;
  /// Convolution product; throws UsageError for elements of different groups.
  GroupAlgebraElement operator*(const GroupAlgebraElement& b) const;
  GroupAlgebraElement scaled(const Rational& q) const;
  /// Linear extension of g -> g^-1.
  GroupAlgebraElement adjoint() const;
  bool operator==(const GroupAlgebraElement& b) const;

  /// Sparse JSON-style text {index: "p/q", ...}.
  std::string to_string() const;

 private:
  void check_same_group(const GroupAlgebraElement& b) const;
  GroupPtr group_;
  std::map<ElementIndex, Rational> c_;
};

struct CentralIdempotent {
  RationalCharacter character;
  GroupAlgebraElement e;
};

struct CentralIdempotentSystem {
  GroupPtr group;
  std::vector<CentralIdempotent> items;  // items[0] belongs to the trivial character
};

/// e = deg/|G| sum_g tr_{K|Q}(chi(g)) g for each orbit; all system laws verified exactly.
CentralIdempotentSystem central_idempotents(const CharacterTable& table,
                                            const std::vector<RationalCharacter>& orbits);
/// Throws InvariantError unless e_i^2 = e_i, e_i e_j = 0, sum = 1 and each e_i is central.
void verify_central_system(const CentralIdempotentSystem& sys);

/// A Q[G]-module with generator matrices acting on column coordinate vectors.
struct RationalModule {
  GroupPtr group;
  std::size_t dim = 0;
  std::vector<RatMatrix> generators;
  std::vector<RationalVector> basis;  // elements of Q[G] spanning the module as a left ideal
  std::uint64_t seed = 0;
  std::string provenance;
};

/// Left ideal spanned by the G-orbit of the given vectors of Q[G].
RationalModule left_ideal_module(const GroupPtr& group, const std::vector<RationalVector>& seeds);
/// Matrices of every group element, built from the generators; throws unless a homomorphism.
std::vector<RatMatrix> element_matrices(const RationalModule& m);

/// A minimal left ideal W of Q[G]e for the orbit rc.
RationalModule spin_module(const GroupAlgebraElement& e, const CharacterTable& table,
                           const RationalCharacter& rc, std::uint64_t seed);

/// Basis of End_G(M) = { T : T A_g = A_g T for every generator g }.
std::vector<RatMatrix> endomorphism_algebra(const RationalModule& m);

struct PrimitiveDecomposition {
  GroupAlgebraElement parent;
  std::vector<GroupAlgebraElement> idempotents;
  long n = 0;
  long m = 1;
  std::size_t d = 1;
  std::uint64_t seed = 0;
};

/// dim_Q of f Q[G] f.
std::size_t corner_dimension(const GroupAlgebraElement& f);

/// Splits the central idempotent e into n = deg/m orthogonal primitive idempotents, using the
/// minimal left ideal w. Every idempotent is certified by dim(p Q[G] p) = m^2 d.
PrimitiveDecomposition primitive_decomposition(const GroupAlgebraElement& e,
                                               const RationalModule& w, long m, std::size_t d,
                                               std::uint64_t seed);

struct ClearedElement {
  Integer multiplier;             // least m with m*alpha integral
  std::vector<Integer> integral;  // dense coefficients of m*alpha
};
ClearedElement denominator_clearing(const GroupAlgebraElement& alpha);

/// (1/|G|) sum_g A_g^T A_g; requires an absolutely irreducible module (End_G of dimension 1).
RatMatrix invariant_inner_product(const RationalModule& m);
/// Gram-Schmidt of the standard basis with respect to a positive-definite form.
std::vector<RationalVector> orthogonal_basis(const RatMatrix& form);
/// p_w = n/(|G| |w|^2) sum_g (w, g w) g for each basis vector; verified to be orthogonal
/// idempotents summing to e_w.
std::vector<GroupAlgebraElement> schur_relation_idempotents(
    const RationalModule& m, const RatMatrix& form, const std::vector<RationalVector>& basis,
    const GroupAlgebraElement& e_w);

/// Everything known about one rational irreducible character.
struct OrbitData {
  RationalCharacter character;
  GroupAlgebraElement e;
  RationalModule module;
  std::size_t endo_dim = 0;
  long m = 1;  // Schur index
  long n = 1;  // deg / m
  int fs = 1;  // Frobenius-Schur indicator of the representative
  PrimitiveDecomposition decomposition;
};

struct AlgebraAnalysis {
  CharacterTable table;
  CentralIdempotentSystem central;
  std::vector<OrbitData> orbits;
};

/// Central idempotents, modules, Schur indices and (optionally) primitive decompositions.
AlgebraAnalysis analyze_algebra(const CharacterTable& table, std::uint64_t seed,
                                bool primitive = true);

}  // namespace jacdecomp
