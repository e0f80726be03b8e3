#pragma once

#include <cstdint>
#include <vector>

#include "jacdecomp/cyclo.hpp"
#include "jacdecomp/perm.hpp"

namespace jacdecomp {

inline constexpr std::uint64_t kDefaultSeed = 20240531;

struct CharacterTableOptions {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t prime_limit = 100000000;
  int split_retries = 64;
};

/// Complex irreducible characters; rows indexed by the group's conjugacy classes.
/// Row 0 is the trivial character, then rows by degree ascending and values descending.
struct CharacterTable {
  GroupPtr group;
  std::uint64_t exponent = 1;
  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<long> degrees;
  std::uint64_t prime = 0;  // modulus used by the construction (0 if loaded)
  std::uint64_t seed = 0;

  std::size_t size() const { return rows.size(); }
  /// Class index of each element's inverse class (the "complex conjugate" class).
  std::vector<std::size_t> inverse_class() const;
};

/// Dixon-Schneider over F_p with p = smallest prime = 1 mod exponent above 2*sqrt(|G|).
CharacterTable character_table(const GroupPtr& group, const CharacterTableOptions& options = {});

/// Rebuilds a table from stored rows (e.g. a cache) and validates it; throws InvariantError.
CharacterTable table_from_rows(const GroupPtr& group, std::vector<std::vector<Cyclotomic>> rows,
                               std::uint64_t seed);

/// Throws InvariantError unless degree sum, integrality, and both orthogonality relations hold.
void validate_table(const CharacterTable& table);

/// Sum_k |C_k| a_k conj(b_k) / |G|.
Cyclotomic inner_product(const CharacterTable& table, const std::vector<Cyclotomic>& a,
                         const std::vector<Cyclotomic>& b);

int frobenius_schur(const CharacterTable& table, std::size_t row);

struct RationalCharacter {
  std::vector<std::size_t> members;  // row indices, the first is the representative
  std::size_t d = 1;                 // orbit size = degree of the character field
  std::vector<Rational> summed;      // sum over the orbit, per class
  std::size_t representative() const { return members.front(); }
};

/// Orbits under zeta_e -> zeta_e^k, ordered by representative row (trivial first).
std::vector<RationalCharacter> galois_orbits(const CharacterTable& table);

/// m = sqrt(endo_dim / d); throws InvariantError unless this is a positive integer.
long schur_index(const RationalCharacter& rc, std::size_t endo_dim);

}  // namespace jacdecomp
