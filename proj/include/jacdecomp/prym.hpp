#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jacdecomp/chartab.hpp"
#include "jacdecomp/perm.hpp"
#include "jacdecomp/qalgebra.hpp"

namespace jacdecomp {

/// Permutation character of G on the left cosets of M, one value per conjugacy class.
struct InducedCharacter {
  Subgroup subgroup;
  std::vector<long> values;
};

InducedCharacter induced_trivial_character(const FiniteGroup& group, const Subgroup& m);

/// dim V^M = (1/|M|) sum_{h in M} chi_V(h) for the table row; throws InvariantError unless the
/// exact sum is a nonnegative integer.
long fixed_dim(const CharacterTable& table, std::size_t row, const Subgroup& m);

/// <chi_V, ind_M^G 1>_G == dim V^M, compared exactly.
bool frobenius_reciprocity_check(const CharacterTable& table, std::size_t row, const Subgroup& m);

/// Character data needed to compare intermediate quotients: orbits and their Schur indices.
class PrymContext {
 public:
  PrymContext(CharacterTable table, std::vector<RationalCharacter> orbits,
              std::vector<long> schur_indices);
  static PrymContext from_analysis(const AlgebraAnalysis& analysis);

  const CharacterTable& table() const { return table_; }
  const GroupPtr& group() const { return table_.group; }
  const std::vector<RationalCharacter>& orbits() const { return orbits_; }
  const std::vector<long>& schur_indices() const { return schur_; }

  /// dim V_i^M for the representative of every orbit i.
  std::vector<long> fixed_dims(const Subgroup& m) const;

 private:
  CharacterTable table_;
  std::vector<RationalCharacter> orbits_;
  std::vector<long> schur_;
};

/// Multiplicities s_i of B_i in P(X_M / X_N), indexed by orbit; s[0] (trivial) is always 0.
struct PrymExponentVector {
  Subgroup sub;
  Subgroup super;
  std::vector<long> s;
  bool is_unit_at(std::size_t i) const;
  bool is_zero() const;
};

/// Requires M to be a subgroup of N (UsageError otherwise).
/// (i) dim V_i^M = 1 and (ii) ind_M - ind_N equals the sum of the Galois orbit of V_i.
bool orbit_difference_criterion(const PrymContext& ctx, const Subgroup& m, const Subgroup& n,
                                std::size_t orbit);

/// s_i = (dim V_i^M - dim V_i^N) / m_i. Throws InvariantError on a non-integral or negative value,
/// or if the orbit-difference criterion holds for some i without s being the unit vector at i.
PrymExponentVector prym_exponents(const PrymContext& ctx, const Subgroup& m, const Subgroup& n);

enum class IdentificationKind { PrymOf, NotIntermediatePrym, Unidentified };
std::string to_string(IdentificationKind kind);

struct FactorIdentification {
  std::size_t orbit = 0;
  long degree = 1;
  std::size_t d = 1;
  long m = 1;
  long n = 1;
  IdentificationKind kind = IdentificationKind::Unidentified;
  std::optional<Subgroup> sub;
  std::optional<Subgroup> super;
  bool orbit_difference = false;  // the chosen pair also satisfies the stricter criterion
  std::size_t candidate_pairs = 0;
};

struct DecomposeOptions {
  std::uint64_t seed = kDefaultSeed;
  bool search_pairs = true;
};

struct DecompositionReport {
  GroupPtr group;
  std::uint64_t seed = 0;
  std::vector<FactorIdentification> factors;  // one per nontrivial orbit, in orbit order
  std::string formula;
  bool derived_exponent_rule = true;
  std::vector<std::string> notes;
  std::vector<std::string> caveats;
};

/// "X" for the trivial subgroup, "Y" for the whole group, else X_{name}.
std::string quotient_label(const FiniteGroup& group, const Subgroup& h);
/// Conventional name if known, else generators in cycle notation, e.g. "<(1,2,3),(1,2)>".
std::string subgroup_label(const FiniteGroup& group, const Subgroup& h);

DecompositionReport decompose(const AlgebraAnalysis& analysis, const DecomposeOptions& options = {});

}  // namespace jacdecomp
