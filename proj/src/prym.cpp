#include "jacdecomp/prym.hpp"

#include <algorithm>
#include <sstream>

#include "jacdecomp/error.hpp"

namespace jacdecomp {

namespace {

// Number of elements of h in each conjugacy class of the group.
std::vector<long> class_counts(const FiniteGroup& group, const Subgroup& h) {
  std::vector<long> counts(group.conjugacy_classes().size(), 0);
  for (ElementIndex x : h.elements()) ++counts[group.class_of(x)];
  return counts;
}

long fixed_dim_from_counts(const CharacterTable& table, std::size_t row,
                           const std::vector<long>& counts, std::size_t order) {
  Cyclotomic sum;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != 0) sum += table.rows[row][k].scaled(Rational(counts[k]));
  }
  const auto q = sum.scaled(ratio(1, static_cast<long>(order))).is_rational();
  if (!q || !is_integer(*q) || sgn(*q) < 0) {
    throw InvariantError("fixed-space dimension is not a nonnegative integer");
  }
  return q->get_num().get_si();
}

void require_inclusion(const Subgroup& m, const Subgroup& n) {
  if (!m.is_subset_of(n)) throw UsageError("the first subgroup is not contained in the second");
}

std::string join_generators(const FiniteGroup& group, const Subgroup& h) {
  std::ostringstream os;
  os << "<";
  const auto gens = group.generating_set(h);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ",";
    os << group.element(gens[i]).cycle_string();
  }
  os << ">";
  return os.str();
}

}  // namespace

InducedCharacter induced_trivial_character(const FiniteGroup& group, const Subgroup& m) {
  if (!group.is_subgroup(m)) throw UsageError("not a subgroup");
  InducedCharacter out{m, {}};
  const auto cosets = group.left_cosets(m);
  for (const auto& cls : group.conjugacy_classes()) {
    const ElementIndex g = cls.representative;
    long fixed = 0;
    for (const auto& coset : cosets) {
      const ElementIndex x = coset.front();
      if (m.contains(group.mul(group.inv(x), group.mul(g, x)))) ++fixed;
    }
    out.values.push_back(fixed);
  }
  return out;
}

long fixed_dim(const CharacterTable& table, std::size_t row, const Subgroup& m) {
  return fixed_dim_from_counts(table, row, class_counts(*table.group, m), m.order());
}

bool frobenius_reciprocity_check(const CharacterTable& table, std::size_t row, const Subgroup& m) {
  const auto ind = induced_trivial_character(*table.group, m);
  std::vector<Cyclotomic> values(ind.values.begin(), ind.values.end());
  const Cyclotomic lhs = inner_product(table, table.rows[row], values);
  return lhs == Cyclotomic(fixed_dim(table, row, m));
}

PrymContext::PrymContext(CharacterTable table, std::vector<RationalCharacter> orbits,
                         std::vector<long> schur_indices)
    : table_(std::move(table)), orbits_(std::move(orbits)), schur_(std::move(schur_indices)) {
  if (orbits_.size() != schur_.size()) throw UsageError("one Schur index per orbit is required");
  for (long m : schur_) {
    if (m < 1) throw UsageError("Schur indices must be positive");
  }
}

PrymContext PrymContext::from_analysis(const AlgebraAnalysis& analysis) {
  std::vector<RationalCharacter> orbits;
  std::vector<long> schur;
  for (const auto& od : analysis.orbits) {
    orbits.push_back(od.character);
    schur.push_back(od.m);
  }
  return PrymContext(analysis.table, std::move(orbits), std::move(schur));
}

std::vector<long> PrymContext::fixed_dims(const Subgroup& m) const {
  const auto counts = class_counts(*table_.group, m);
  std::vector<long> out;
  for (const auto& rc : orbits_) {
    out.push_back(fixed_dim_from_counts(table_, rc.representative(), counts, m.order()));
  }
  return out;
}

bool PrymExponentVector::is_unit_at(std::size_t i) const {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] != (k == i ? 1 : 0)) return false;
  }
  return true;
}

bool PrymExponentVector::is_zero() const {
  return std::all_of(s.begin(), s.end(), [](long v) { return v == 0; });
}

namespace {

bool criterion_from_data(const PrymContext& ctx, const std::vector<long>& dims_m,
                         const InducedCharacter& ind_m, const InducedCharacter& ind_n,
                         std::size_t orbit) {
  if (dims_m[orbit] != 1) return false;
  const auto& summed = ctx.orbits()[orbit].summed;
  for (std::size_t k = 0; k < summed.size(); ++k) {
    if (Rational(ind_m.values[k] - ind_n.values[k]) != summed[k]) return false;
  }
  return true;
}

PrymExponentVector exponents_from_dims(const PrymContext& ctx, const Subgroup& m,
                                       const Subgroup& n, const std::vector<long>& dm,
                                       const std::vector<long>& dn) {
  PrymExponentVector out{m, n, std::vector<long>(dm.size(), 0)};
  for (std::size_t i = 0; i < dm.size(); ++i) {
    const long diff = dm[i] - dn[i];
    const long mi = ctx.schur_indices()[i];
    if (diff < 0 || diff % mi != 0) {
      throw InvariantError("exponent rule gives a negative or non-integral multiplicity");
    }
    out.s[i] = diff / mi;
  }
  if (out.s[0] != 0) throw InvariantError("nonzero exponent on the trivial character");
  return out;
}

}  // namespace

bool orbit_difference_criterion(const PrymContext& ctx, const Subgroup& m, const Subgroup& n,
                                std::size_t orbit) {
  require_inclusion(m, n);
  if (orbit >= ctx.orbits().size()) throw UsageError("orbit index out of range");
  const auto& g = *ctx.group();
  return criterion_from_data(ctx, ctx.fixed_dims(m), induced_trivial_character(g, m),
                             induced_trivial_character(g, n), orbit);
}

PrymExponentVector prym_exponents(const PrymContext& ctx, const Subgroup& m, const Subgroup& n) {
  require_inclusion(m, n);
  const auto& g = *ctx.group();
  if (!g.is_subgroup(m) || !g.is_subgroup(n)) throw UsageError("not a subgroup");
  const auto dm = ctx.fixed_dims(m);
  auto out = exponents_from_dims(ctx, m, n, dm, ctx.fixed_dims(n));
  const auto ind_m = induced_trivial_character(g, m);
  const auto ind_n = induced_trivial_character(g, n);
  for (std::size_t i = 1; i < ctx.orbits().size(); ++i) {
    if (criterion_from_data(ctx, dm, ind_m, ind_n, i) && !out.is_unit_at(i)) {
      throw InvariantError("orbit-difference criterion holds without a unit exponent vector");
    }
  }
  return out;
}

std::string to_string(IdentificationKind kind) {
  switch (kind) {
    case IdentificationKind::PrymOf: return "PrymOf";
    case IdentificationKind::NotIntermediatePrym: return "NotIntermediatePrym";
    case IdentificationKind::Unidentified: return "Unidentified";
  }
  return "Unidentified";
}

std::string subgroup_label(const FiniteGroup& group, const Subgroup& h) {
  if (auto name = group.conventional_name(h)) return *name;
  if (h.order() == 1) return "1";
  if (h.order() == group.order()) return "G";
  return join_generators(group, h);
}

std::string quotient_label(const FiniteGroup& group, const Subgroup& h) {
  if (h.order() == 1) return "X";
  if (h.order() == group.order()) return "Y";
  return "X_{" + subgroup_label(group, h) + "}";
}

namespace {

// Larger M, then larger N, then lexicographically smaller (M, N).
bool better_pair(const Subgroup& m1, const Subgroup& n1, const Subgroup& m2, const Subgroup& n2) {
  if (m1.order() != m2.order()) return m1.order() > m2.order();
  if (n1.order() != n2.order()) return n1.order() > n2.order();
  if (m1.elements() != m2.elements()) return m1.elements() < m2.elements();
  return n1.elements() < n2.elements();
}

}  // namespace

DecompositionReport decompose(const AlgebraAnalysis& analysis, const DecomposeOptions& options) {
  const PrymContext ctx = PrymContext::from_analysis(analysis);
  const GroupPtr& gp = ctx.group();
  const FiniteGroup& g = *gp;
  DecompositionReport report;
  report.group = gp;
  report.seed = options.seed;

  const std::size_t r = ctx.orbits().size();
  for (std::size_t i = 1; i < r; ++i) {
    const auto& od = analysis.orbits[i];
    FactorIdentification f;
    f.orbit = i;
    f.degree = analysis.table.degrees[od.character.representative()];
    f.d = od.character.d;
    f.m = od.m;
    f.n = od.n;
    report.factors.push_back(f);
  }

  if (options.search_pairs) {
    const auto& lattice = g.subgroup_lattice();
    std::vector<std::vector<long>> dims;
    std::vector<InducedCharacter> induced;
    for (const auto& h : lattice.subgroups) {
      dims.push_back(ctx.fixed_dims(h));
      induced.push_back(induced_trivial_character(g, h));
    }
    for (const auto& cls : lattice.classes) {
      const std::size_t mi = cls.front();
      const Subgroup& m = lattice.subgroups[mi];
      for (std::size_t ni = 0; ni < lattice.subgroups.size(); ++ni) {
        const Subgroup& n = lattice.subgroups[ni];
        if (n.order() <= m.order() || !m.is_subset_of(n)) continue;
        const auto s = exponents_from_dims(ctx, m, n, dims[mi], dims[ni]);
        for (std::size_t i = 1; i < r; ++i) {
          const bool criterion = criterion_from_data(ctx, dims[mi], induced[mi], induced[ni], i);
          if (criterion && !s.is_unit_at(i)) {
            throw InvariantError("orbit-difference criterion holds without a unit exponent vector");
          }
          if (!s.is_unit_at(i)) continue;
          auto& f = report.factors[i - 1];
          ++f.candidate_pairs;
          if (!f.sub || better_pair(m, n, *f.sub, *f.super)) {
            f.sub = m;
            f.super = n;
            f.orbit_difference = criterion;
          }
        }
      }
    }
    for (auto& f : report.factors) {
      f.kind = f.sub ? IdentificationKind::PrymOf : IdentificationKind::NotIntermediatePrym;
    }
  }

  std::ostringstream formula;
  formula << "JX ~ JY";
  for (const auto& f : report.factors) {
    formula << " x ";
    if (f.kind == IdentificationKind::PrymOf) {
      formula << "P(" << quotient_label(g, *f.sub) << "/" << quotient_label(g, *f.super) << ")";
    } else {
      formula << "B_" << (f.orbit + 1);
    }
    if (f.n != 1) formula << "^" << f.n;
  }
  report.formula = formula.str();

  report.notes.push_back(
      "exponents use the derived rule s_i = (dim V_i^M - dim V_i^N) / m_i");
  for (const auto& f : report.factors) {
    if (f.kind == IdentificationKind::NotIntermediatePrym) {
      report.notes.push_back("B_" + std::to_string(f.orbit + 1) +
                             " is not an intermediate Prym; it may be realized as a connected "
                             "component of an intersection of Pryms (not computed)");
    }
  }
  report.caveats.push_back(
      "identifications hold up to isogeny; individual factors may vanish for special curves, "
      "since the genus of Y is not known");
  return report;
}

}  // namespace jacdecomp
