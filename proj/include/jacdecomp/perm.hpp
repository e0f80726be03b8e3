#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jacdecomp {

inline constexpr std::size_t kDefaultOrderBound = 2000;

/// A bijection of {0, ..., degree-1}; composition is right-to-left, (a*b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  /// Cycles use 0-based points; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long k) const;
  bool is_identity() const;
  std::size_t order() const;

  /// 1-based cycle notation, e.g. "(1,2,3)(4,5)"; the identity renders as "()".
  std::string cycle_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

using ElementIndex = std::uint32_t;

struct ConjugacyClass {
  ElementIndex representative;        // least member
  std::vector<ElementIndex> elements; // sorted
};

/// A subgroup as a sorted list of element indices of its parent group.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(std::vector<ElementIndex> elements);

  std::size_t order() const { return elements_.size(); }
  const std::vector<ElementIndex>& elements() const { return elements_; }
  bool contains(ElementIndex g) const;
  bool is_subset_of(const Subgroup& other) const;

  std::strong_ordering operator<=>(const Subgroup& rhs) const;
  bool operator==(const Subgroup& rhs) const = default;

 private:
  std::vector<ElementIndex> elements_;
};

struct SubgroupLattice {
  std::vector<Subgroup> subgroups;                 // sorted by (order, elements)
  std::vector<std::size_t> class_of;               // conjugacy class id per subgroup
  std::vector<std::vector<std::size_t>> classes;   // subgroup ids per class, ordered by first member
  std::size_t index_of(const Subgroup& h) const;   // throws if absent
};

struct PresetId {
  std::string family;  // "S", "A", "D", "Q8", "Z"
  std::optional<long> parameter;
};

struct NamedSubgroup {
  std::string name;
  std::vector<Permutation> generators;
};

struct GroupLabels {
  std::string name;
  std::optional<PresetId> preset;
  std::vector<NamedSubgroup> named_subgroups;
};

/// A concrete permutation group with all elements materialized in lexicographic order.
class FiniteGroup {
 public:
  FiniteGroup(std::size_t degree, std::vector<Permutation> generators, GroupLabels labels = {},
              std::size_t order_bound = kDefaultOrderBound);

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t order_bound() const { return order_bound_; }

  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<ElementIndex>& generator_indices() const { return generator_indices_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(ElementIndex i) const { return elements_[i]; }

  std::optional<ElementIndex> find(const Permutation& p) const;
  ElementIndex index_of(const Permutation& p) const;
  static constexpr ElementIndex identity() { return 0; }

  ElementIndex mul(ElementIndex a, ElementIndex b) const { return table_[a * order() + b]; }
  ElementIndex inv(ElementIndex a) const { return inverse_[a]; }
  ElementIndex power(ElementIndex a, long k) const;
  std::size_t element_order(ElementIndex a) const { return element_order_[a]; }
  std::uint64_t exponent() const { return exponent_; }
  bool is_abelian() const;

  const std::vector<ConjugacyClass>& conjugacy_classes() const { return classes_; }
  std::size_t class_of(ElementIndex g) const { return class_of_[g]; }

  Subgroup generated_subgroup(const std::vector<ElementIndex>& gens) const;
  /// Throws UsageError if a generator is not an element of this group.
  Subgroup subgroup_from_generators(const std::vector<Permutation>& gens) const;
  Subgroup trivial_subgroup() const;
  Subgroup whole_group() const;
  bool is_subgroup(const Subgroup& h) const;
  Subgroup conjugate(const Subgroup& h, ElementIndex g) const;
  bool are_conjugate(const Subgroup& a, const Subgroup& b) const;
  /// Greedy generating set: elements of largest order first.
  std::vector<ElementIndex> generating_set(const Subgroup& h) const;

  /// Every subgroup exactly once; computed on first use and cached.
  const SubgroupLattice& subgroup_lattice() const;
  /// Installs a previously computed subgroup list after verifying that it is sorted, consists of
  /// subgroups, and is complete (contains every cyclic subgroup and is closed under joins with
  /// them). Throws InvariantError on failure; returns false if the lattice was already known.
  bool adopt_subgroup_lattice(std::vector<Subgroup> subgroups) const;

  /// Partition into left cosets gM, each sorted, ordered by least element.
  std::vector<std::vector<ElementIndex>> left_cosets(const Subgroup& m) const;

  const std::optional<PresetId>& preset() const { return preset_; }
  const std::vector<NamedSubgroup>& conventional_subgroups() const { return named_; }
  /// Conventional name of h (matched up to conjugacy), if any.
  std::optional<std::string> conventional_name(const Subgroup& h) const;

 private:
  std::vector<std::pair<Subgroup, ElementIndex>> cyclic_subgroups() const;
  void group_into_classes(SubgroupLattice& lat) const;

  std::size_t degree_;
  std::string name_;
  std::size_t order_bound_;
  std::vector<Permutation> generators_;
  std::vector<ElementIndex> generator_indices_;
  std::vector<Permutation> elements_;
  std::vector<ElementIndex> table_;
  std::vector<ElementIndex> inverse_;
  std::vector<std::size_t> element_order_;
  std::uint64_t exponent_ = 1;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::optional<PresetId> preset_;
  std::vector<NamedSubgroup> named_;

  mutable std::once_flag lattice_once_;
  mutable std::unique_ptr<SubgroupLattice> lattice_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Preset families: S(n), A(n) natural action; D(n) of order 2n on n points; Q8 and Z(n)
/// via the regular action.
GroupPtr make_preset(const PresetId& id, std::size_t order_bound = kDefaultOrderBound);

/// Grammar: "S:4", "A:5", "D:7", "Q8", "Z:12", or "perm:<degree>:<gen1>;<gen2>;..." where each
/// generator is a comma-separated list of 0-based images.
GroupPtr parse_group_spec(const std::string& spec, std::size_t order_bound = kDefaultOrderBound);

/// Parses a subgroup of g: "1" (trivial), "G" (whole group), a conventional name, or
/// generators as in the perm grammar ("0,1,3,2;1,0,2,3").
Subgroup parse_subgroup_spec(const FiniteGroup& g, const std::string& spec);

}  // namespace jacdecomp
