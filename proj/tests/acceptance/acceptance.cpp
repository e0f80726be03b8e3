// Acceptance suite: one line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jacdecomp/chartab.hpp"
#include "jacdecomp/error.hpp"
#include "jacdecomp/lattice.hpp"
#include "jacdecomp/prym.hpp"
#include "jacdecomp/qalgebra.hpp"
#include "support/numeric_oracle.hpp"

using namespace jacdecomp;

namespace {

constexpr double kOracleTolerance = 1e-6;
constexpr std::size_t kOracleOrderLimit = 24;
constexpr std::uint64_t kSeed = kDefaultSeed;

// Collects failed expectations for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct Criterion {
  int number;
  std::string description;
  double time_limit;  // seconds; 0 means unlimited
  std::function<void(Checker&)> body;
};

std::vector<PresetId> preset_groups() {
  std::vector<PresetId> out;
  for (long n = 1; n <= 5; ++n) out.push_back({"S", n});
  for (long n = 3; n <= 5; ++n) out.push_back({"A", n});
  for (long n = 3; n <= 10; ++n) out.push_back({"D", n});
  out.push_back({"Q8", std::nullopt});
  for (long n = 1; n <= 12; ++n) out.push_back({"Z", n});
  return out;
}

std::string preset_name(const PresetId& id) {
  return id.family + (id.parameter ? std::to_string(*id.parameter) : "");
}

Permutation cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& c) {
  return Permutation::from_cycles(degree, c);
}

// Element indices of the subgroup generated by explicit permutations, closed by brute force.
Subgroup closure(const FiniteGroup& g, const std::vector<Permutation>& gens) {
  std::set<ElementIndex> elems{FiniteGroup::identity()};
  std::vector<ElementIndex> frontier{FiniteGroup::identity()};
  while (!frontier.empty()) {
    const ElementIndex x = frontier.back();
    frontier.pop_back();
    for (const auto& p : gens) {
      const ElementIndex y = g.index_of(p * g.element(x));
      if (elems.insert(y).second) frontier.push_back(y);
    }
  }
  return Subgroup(std::vector<ElementIndex>(elems.begin(), elems.end()));
}

// Some x in G with x M x^-1 = M' and x N x^-1 = N' at the same time.
bool pair_conjugate_to(const FiniteGroup& g, const Subgroup& m, const Subgroup& n,
                       const Subgroup& m2, const Subgroup& n2) {
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (g.conjugate(m, x) == m2 && g.conjugate(n, x) == n2) return true;
  }
  return false;
}

// Fixed cosets of g on G/M, computed from explicit coset sets.
std::vector<long> brute_induced(const FiniteGroup& g, const Subgroup& m) {
  std::vector<std::set<ElementIndex>> cosets;
  std::vector<bool> covered(g.order(), false);
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    std::set<ElementIndex> c;
    for (ElementIndex h : m.elements()) c.insert(g.mul(x, h));
    for (ElementIndex y : c) covered[y] = true;
    cosets.push_back(std::move(c));
  }
  std::vector<long> out;
  for (const auto& cls : g.conjugacy_classes()) {
    long fixed = 0;
    for (const auto& c : cosets) {
      std::set<ElementIndex> image;
      for (ElementIndex y : c) image.insert(g.mul(cls.representative, y));
      fixed += image == c;
    }
    out.push_back(fixed);
  }
  return out;
}

// (1/|M|) sum_{h in M} chi(h), summed element by element.
Cyclotomic brute_fixed_dim(const FiniteGroup& g, const std::vector<Cyclotomic>& row,
                           const Subgroup& m) {
  Cyclotomic sum;
  for (ElementIndex h : m.elements()) sum += row[g.class_of(h)];
  return sum.scaled(ratio(1, static_cast<long>(m.order())));
}

// Every subgroup of a two-generated group: closures of all pairs of elements.
std::vector<Subgroup> two_generated_subgroups(const FiniteGroup& g) {
  std::set<std::vector<ElementIndex>> seen;
  for (ElementIndex a = 0; a < g.order(); ++a) {
    for (ElementIndex b = a; b < g.order(); ++b) {
      seen.insert(closure(g, {g.element(a), g.element(b)}).elements());
    }
  }
  std::vector<Subgroup> out;
  for (const auto& e : seen) out.emplace_back(e);
  return out;
}

AlgebraAnalysis analysis_for(const GroupPtr& g, bool primitive) {
  CharacterTableOptions opts;
  opts.seed = kSeed;
  return analyze_algebra(character_table(g, opts), kSeed, primitive);
}

DecompositionReport report_for(const AlgebraAnalysis& a) {
  DecomposeOptions opts;
  opts.seed = kSeed;
  return decompose(a, opts);
}

std::size_t class_of_perm(const FiniteGroup& g, const Permutation& p) {
  return g.class_of(g.index_of(p));
}

const FactorIdentification& factor_for_orbit(const DecompositionReport& r, std::size_t orbit) {
  for (const auto& f : r.factors) {
    if (f.orbit == orbit) return f;
  }
  throw InvariantError("no factor for orbit " + std::to_string(orbit));
}

// Orbit whose representative row has the given degree and value at a class.
std::optional<std::size_t> find_orbit(const AlgebraAnalysis& a, long degree, std::size_t cls,
                                      const Cyclotomic& value) {
  for (std::size_t i = 0; i < a.orbits.size(); ++i) {
    const std::size_t rep = a.orbits[i].character.representative();
    if (a.table.degrees[rep] == degree && a.table.rows[rep][cls] == value) return i;
  }
  return std::nullopt;
}

// Elements on which a linear character is 1.
Subgroup kernel_of_linear(const AlgebraAnalysis& a, std::size_t row) {
  const auto& g = *a.table.group;
  std::vector<ElementIndex> k;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (a.table.rows[row][g.class_of(x)] == Cyclotomic(1)) k.push_back(x);
  }
  return Subgroup(std::move(k));
}

bool identified_as(const FiniteGroup& g, const FactorIdentification& f, const Subgroup& m,
                   const Subgroup& n) {
  return f.kind == IdentificationKind::PrymOf && f.sub && f.super &&
         pair_conjugate_to(g, m, n, *f.sub, *f.super);
}

// ---------------------------------------------------------------------------------------------

void s4_end_to_end(Checker& c) {
  const auto g = make_preset({"S", 4});
  const auto a = analysis_for(g, false);
  const auto r = report_for(a);
  const auto& G = *g;

  c.expect(r.formula ==
               "JX ~ JY x P(X_{A4}/Y) x P(X_{D4}/Y)^2 x P(X_{S3}/Y)^3 x P(X_{Z}/X_{D4})^3",
           "formula: " + r.formula);
  std::vector<long> exponents{1};
  for (const auto& f : r.factors) exponents.push_back(f.n);
  c.expect(exponents == std::vector<long>{1, 1, 2, 3, 3}, "exponents");

  // Subgroups as written for S4 on {1,2,3,4}, shifted to 0-based points.
  const Subgroup a4 = closure(G, {cycles(4, {{0, 1, 2}}), cycles(4, {{1, 2, 3}})});
  const Subgroup d4 = closure(G, {cycles(4, {{0, 2}}), cycles(4, {{0, 1, 2, 3}})});
  const Subgroup z = closure(G, {cycles(4, {{0, 1, 2, 3}})});
  const Subgroup s3 = closure(G, {cycles(4, {{1, 2}}), cycles(4, {{1, 2, 3}})});
  const Subgroup whole = G.whole_group();
  c.expect(a4.order() == 12 && d4.order() == 8 && z.order() == 4 && s3.order() == 6,
           "subgroup orders");

  const std::vector<std::size_t> listed_classes{
      class_of_perm(G, Permutation::identity(4)), class_of_perm(G, cycles(4, {{0, 1}})),
      class_of_perm(G, cycles(4, {{0, 1, 2}})), class_of_perm(G, cycles(4, {{0, 1, 2, 3}})),
      class_of_perm(G, cycles(4, {{0, 1}, {2, 3}}))};
  auto in_table_order = [&](const std::vector<long>& by_class) {
    std::vector<long> out;
    for (std::size_t k : listed_classes) out.push_back(by_class[k]);
    return out;
  };
  const auto ind_z = induced_trivial_character(G, z).values;
  const auto ind_d4 = induced_trivial_character(G, d4).values;
  c.expect(in_table_order(ind_z) == std::vector<long>{6, 0, 0, 2, 2}, "ind Z");
  c.expect(in_table_order(ind_d4) == std::vector<long>{3, 1, 0, 1, 3}, "ind D4");
  c.expect(ind_z == brute_induced(G, z) && ind_d4 == brute_induced(G, d4),
           "induced characters agree with coset counting");

  const std::vector<long> vu{3, -1, 0, 1, -1};
  bool found = false;
  for (const auto& row : a.table.rows) {
    bool match = true;
    for (std::size_t i = 0; i < 5; ++i) match = match && row[listed_classes[i]] == Cyclotomic(vu[i]);
    found = found || match;
  }
  c.expect(found, "row (3,-1,0,1,-1) present");

  const auto sign = find_orbit(a, 1, listed_classes[1], Cyclotomic(-1));
  const auto w = find_orbit(a, 2, listed_classes[0], Cyclotomic(2));
  const auto v = find_orbit(a, 3, listed_classes[1], Cyclotomic(1));
  const auto v_sign = find_orbit(a, 3, listed_classes[1], Cyclotomic(-1));
  if (!sign || !w || !v || !v_sign) {
    c.expect(false, "orbits of S4 not found");
    return;
  }
  const std::vector<std::tuple<std::size_t, Subgroup, Subgroup, long>> expected{
      {*sign, a4, whole, 1}, {*w, d4, whole, 2}, {*v, s3, whole, 3}, {*v_sign, z, d4, 3}};
  for (const auto& [orbit, m, n, mult] : expected) {
    const auto& f = factor_for_orbit(r, orbit);
    c.expect(identified_as(G, f, m, n), "pair for B_" + std::to_string(orbit + 1));
    c.expect(f.n == mult, "multiplicity for B_" + std::to_string(orbit + 1));
    c.expect(f.orbit_difference, "orbit-difference criterion for B_" + std::to_string(orbit + 1));
  }
}

void a5(Checker& c) {
  const auto g = make_preset({"A", 5});
  const auto& G = *g;
  const auto a = analysis_for(g, false);
  const auto r = report_for(a);
  c.expect(G.subgroup_lattice().subgroups.size() == 59, "59 subgroups");

  const Subgroup a4 = closure(G, {cycles(5, {{1, 2}, {3, 4}}), cycles(5, {{2, 3, 4}})});
  const Subgroup d5 = closure(G, {cycles(5, {{0, 1, 2, 3, 4}}), cycles(5, {{1, 4}, {2, 3}})});
  const Subgroup z5 = closure(G, {cycles(5, {{0, 1, 2, 3, 4}})});
  c.expect(a4.order() == 12 && d5.order() == 10 && z5.order() == 5, "subgroup orders");

  const auto id_class = G.class_of(FiniteGroup::identity());
  const auto v = find_orbit(a, 4, id_class, Cyclotomic(4));
  const auto w = find_orbit(a, 5, id_class, Cyclotomic(5));
  const auto t = find_orbit(a, 3, id_class, Cyclotomic(3));
  if (!v || !w || !t) {
    c.expect(false, "orbits of A5 not found");
    return;
  }
  c.expect(a.orbits.size() == 4, "four rational irreducibles");
  c.expect(a.orbits[*t].character.d == 2, "degree-3 orbit has size 2");
  const auto& fv = factor_for_orbit(r, *v);
  const auto& fw = factor_for_orbit(r, *w);
  const auto& ft = factor_for_orbit(r, *t);
  c.expect(identified_as(G, fv, a4, G.whole_group()), "B_V ~ P(X_A4/Y)");
  c.expect(identified_as(G, fw, d5, G.whole_group()), "B_W ~ P(X_D5/Y)");
  c.expect(identified_as(G, ft, z5, d5), "B_T ~ P(X_Z5/X_D5)");
  c.expect(fv.n == 4 && fw.n == 5 && ft.n == 3, "exponents (4,5,3)");
  c.expect(ft.d == 2, "d = 2 for T");
}

void dihedral_odd(Checker& c) {
  for (long p : {3L, 5L, 7L}) {
    const std::string tag = "D" + std::to_string(p) + ": ";
    const auto g = make_preset({"D", p});
    const auto& G = *g;
    const auto a = analysis_for(g, false);
    const auto r = report_for(a);
    const Permutation rot = G.generators()[0];
    const Permutation refl = G.generators()[1];
    const Subgroup rr = closure(G, {rot});
    const Subgroup ss = closure(G, {refl});
    c.expect(rot.order() == static_cast<std::size_t>(p) && refl.order() == 2 &&
                 refl * rot * refl == rot.inverse(),
             tag + "presentation");
    c.expect(a.orbits.size() == 3, tag + "three rational irreducibles");
    c.expect(r.formula == "JX ~ JY x P(X_{<r>}/Y) x P(X_{<s>}/Y)^2", tag + r.formula);
    if (a.orbits.size() != 3) continue;
    c.expect(a.orbits[2].character.d == static_cast<std::size_t>((p - 1) / 2),
             tag + "orbit size (p-1)/2");
    c.expect(identified_as(G, factor_for_orbit(r, 1), rr, G.whole_group()), tag + "B_U'");
    c.expect(identified_as(G, factor_for_orbit(r, 2), ss, G.whole_group()), tag + "B_W");
    c.expect(factor_for_orbit(r, 2).n == 2, tag + "B_W exponent 2");

    // The two-dimensional characters are those of the explicit matrices: trace at r^k is
    // w^{ik} + w^{-ik} and 0 at s r^k.
    std::set<std::size_t> rows_seen;
    for (long i = 1; i <= (p - 1) / 2; ++i) {
      std::vector<Cyclotomic> expected(G.conjugacy_classes().size());
      for (long k = 0; k < p; ++k) {
        const auto rk = rot.pow(k);
        expected[class_of_perm(G, rk)] = Cyclotomic::zeta(p, i * k) + Cyclotomic::zeta(p, -i * k);
        expected[class_of_perm(G, refl * rk)] = Cyclotomic(0);
      }
      for (std::size_t row = 0; row < a.table.size(); ++row) {
        if (a.table.rows[row] == expected) rows_seen.insert(row);
      }
    }
    c.expect(rows_seen.size() == static_cast<std::size_t>((p - 1) / 2), tag + "explicit V_i rows");
    std::set<std::size_t> orbit_members(a.orbits[2].character.members.begin(),
                                        a.orbits[2].character.members.end());
    c.expect(rows_seen == orbit_members, tag + "V_i form one Galois orbit");
  }
}

void quaternion(Checker& c) {
  const auto g = make_preset({"Q8", std::nullopt});
  const auto& G = *g;
  const auto a = analysis_for(g, false);
  const auto r = report_for(a);
  c.expect(r.factors.size() + 1 == 5, "five factors");
  c.expect(r.formula ==
               "JX ~ JY x P(X_{<i>}/Y) x P(X_{<j>}/Y) x P(X_{<ij>}/Y) x P(X/X_{<-1>})",
           "formula: " + r.formula);

  std::vector<ElementIndex> centre;
  for (ElementIndex x = 0; x < G.order(); ++x) {
    bool central = true;
    for (ElementIndex y = 0; y < G.order(); ++y) central = central && G.mul(x, y) == G.mul(y, x);
    if (central) centre.push_back(x);
  }
  const Subgroup z(centre);
  c.expect(z.order() == 2, "centre of order 2");

  std::set<std::vector<ElementIndex>> kernels;
  for (std::size_t i = 1; i < a.orbits.size(); ++i) {
    const std::size_t rep = a.orbits[i].character.representative();
    const auto& f = factor_for_orbit(r, i);
    if (a.table.degrees[rep] == 1) {
      const Subgroup k = kernel_of_linear(a, rep);
      kernels.insert(k.elements());
      c.expect(f.kind == IdentificationKind::PrymOf && f.sub == k && f.super == G.whole_group(),
               "linear factor " + std::to_string(i + 1) + " is P(X_ker/Y)");
      c.expect(f.sub && G.conventional_name(*f.sub).has_value(), "named cyclic subgroup");
    } else {
      const auto& od = a.orbits[i];
      c.expect(od.endo_dim == 4, "End_G(W) has dimension 4");
      c.expect(od.m == 2 && od.n == 1, "m = 2, n = 1");
      Cyclotomic fs;
      for (ElementIndex x = 0; x < G.order(); ++x) fs += a.table.rows[rep][G.class_of(G.mul(x, x))];
      c.expect(fs.scaled(ratio(1, 8)) == Cyclotomic(-1), "Frobenius-Schur indicator -1 (brute)");
      c.expect(od.fs == -1, "Frobenius-Schur indicator -1");
      c.expect(f.kind == IdentificationKind::PrymOf && f.sub == G.trivial_subgroup() &&
                   f.super == z,
               "B_W ~ P(X/X_<-1>)");
    }
  }
  c.expect(kernels.size() == 3, "three distinct index-2 kernels");
}

void dihedral_even(Checker& c) {
  for (long p : {5L, 7L}) {
    const std::string tag = "D" + std::to_string(2 * p) + ": ";
    const auto g = make_preset({"D", 2 * p});
    const auto& G = *g;
    const auto a = analysis_for(g, false);
    const auto r = report_for(a);
    const Permutation rot = G.generators()[0];
    const Permutation refl = G.generators()[1];
    const Subgroup rr = closure(G, {rot});
    const Subgroup dp = closure(G, {refl, rot.pow(2)});
    const Subgroup dp_tilde = closure(G, {rot.pow(p) * refl, rot.pow(2)});
    const Subgroup d2 = closure(G, {refl, rot.pow(p)});
    c.expect(a.orbits.size() == 6, tag + "six rational irreducibles");
    if (a.orbits.size() != 6) continue;

    // Linear characters: each factor is P(X_ker/Y) and the kernels are <r>, D_p, ~D_p.
    std::set<std::vector<ElementIndex>> expected_kernels{rr.elements(), dp.elements(),
                                                         dp_tilde.elements()};
    std::set<std::vector<ElementIndex>> kernels;
    const std::size_t rp_class = class_of_perm(G, rot.pow(p));
    std::optional<std::size_t> odd, even;
    for (std::size_t i = 1; i < a.orbits.size(); ++i) {
      const std::size_t rep = a.orbits[i].character.representative();
      const auto& f = factor_for_orbit(r, i);
      if (a.table.degrees[rep] == 1) {
        const Subgroup k = kernel_of_linear(a, rep);
        kernels.insert(k.elements());
        c.expect(identified_as(G, f, k, G.whole_group()), tag + "linear factor");
      } else if (a.orbits[i].character.summed[rp_class] == Rational(-(p - 1))) {
        odd = i;
      } else if (a.orbits[i].character.summed[rp_class] == Rational(p - 1)) {
        even = i;
      }
    }
    c.expect(kernels == expected_kernels, tag + "kernels <r>, D_p, ~D_p");
    if (!odd || !even) {
      c.expect(false, tag + "two-dimensional orbits not found");
      continue;
    }
    const auto& f_even = factor_for_orbit(r, *even);
    c.expect(identified_as(G, f_even, d2, G.whole_group()), tag + "W_6 ~ P(X_D2/Y)");
    const auto& f_odd = factor_for_orbit(r, *odd);
    c.expect(f_odd.kind == IdentificationKind::NotIntermediatePrym, tag + "W_5 not a Prym");
    c.expect(f_odd.candidate_pairs == 0, tag + "no candidate pair for W_5");
    c.expect(f_odd.n == 2 && f_even.n == 2, tag + "exponents 2");

    // Independent scan over all pairs M < N: no exponent vector is the unit vector at W_5.
    const auto subgroups = two_generated_subgroups(G);
    c.expect(subgroups.size() == G.subgroup_lattice().subgroups.size(), tag + "subgroup count");
    bool all_schur_one = true;
    for (const auto& od : a.orbits) all_schur_one = all_schur_one && od.m == 1;
    c.expect(all_schur_one, tag + "Schur indices 1");
    std::vector<std::vector<Rational>> dims;  // dim_Q W_i^M / d_i
    for (const auto& m : subgroups) {
      std::vector<Rational> row;
      for (const auto& od : a.orbits) {
        Rational s = 0;
        for (ElementIndex h : m.elements()) s += od.character.summed[G.class_of(h)];
        s /= Rational(static_cast<long>(m.order() * od.character.d));
        row.push_back(s);
      }
      dims.push_back(row);
    }
    std::size_t unit_hits = 0;
    for (std::size_t mi = 0; mi < subgroups.size(); ++mi) {
      for (std::size_t ni = 0; ni < subgroups.size(); ++ni) {
        if (mi == ni || !subgroups[mi].is_subset_of(subgroups[ni])) continue;
        bool unit = true;
        for (std::size_t i = 0; i < a.orbits.size(); ++i) {
          unit = unit && dims[mi][i] - dims[ni][i] == Rational(i == *odd ? 1 : 0);
        }
        unit_hits += unit;
      }
    }
    c.expect(unit_hits == 0, tag + "brute-force scan finds a unit vector at W_5");
  }
}

void idempotent_suite(Checker& c) {
  for (const auto& id : preset_groups()) {
    const auto g = make_preset(id);
    const auto t = character_table(g);
    const auto sys = central_idempotents(t, galois_orbits(t));
    const GroupAlgebraElement zero(g);
    GroupAlgebraElement sum(g);
    bool ok = true;
    for (std::size_t i = 0; i < sys.items.size(); ++i) {
      const auto& ei = sys.items[i].e;
      ok = ok && !ei.is_zero();
      sum = sum + ei;
      for (std::size_t j = 0; j < sys.items.size(); ++j) {
        ok = ok && ei * sys.items[j].e == (i == j ? ei : zero);
      }
      for (ElementIndex x : g->generator_indices()) {
        const auto gx = GroupAlgebraElement::element(g, x);
        ok = ok && gx * ei == ei * gx;
      }
    }
    ok = ok && sum == GroupAlgebraElement::one(g);
    c.expect(ok, preset_name(id));
  }
}

void schur_relation_suite(Checker& c) {
  for (long n : {3L, 4L}) {
    const std::string tag = "S" + std::to_string(n) + ": ";
    const auto g = make_preset({"S", n});
    const auto a = analysis_for(g, true);
    const std::size_t transposition = class_of_perm(*g, cycles(n, {{0, 1}}));
    const auto v = find_orbit(a, n - 1, transposition, Cyclotomic(n - 3));
    if (!v) {
      c.expect(false, tag + "standard representation not found");
      continue;
    }
    const auto& od = a.orbits[*v];
    const auto form = invariant_inner_product(od.module);
    for (const auto& m : od.module.generators) {
      c.expect(m.transpose() * form * m == form, tag + "form is invariant");
    }
    const auto basis = orthogonal_basis(form);
    const auto ps = schur_relation_idempotents(od.module, form, basis, od.e);
    c.expect(static_cast<long>(ps.size()) == n - 1, tag + "deg idempotents");
    GroupAlgebraElement sum(g);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      sum = sum + ps[i];
      for (std::size_t j = 0; j < ps.size(); ++j) {
        c.expect(ps[i] * ps[j] == (i == j ? ps[i] : GroupAlgebraElement(g)),
                 tag + "orthogonal idempotents");
      }
      const auto md = static_cast<std::size_t>(od.m * od.m) * od.character.d;
      c.expect(corner_dimension(ps[i]) == md, tag + "primitive by corner dimension");
    }
    c.expect(sum == od.e, tag + "sum equals e_W");
  }
}

void frobenius_suite(Checker& c) {
  for (const auto& id : preset_groups()) {
    const auto g = make_preset(id);
    const auto t = character_table(g);
    bool ok = true;
    for (const auto& m : g->subgroup_lattice().subgroups) {
      const auto brute = brute_induced(*g, m);
      const auto ind = induced_trivial_character(*g, m);
      ok = ok && ind.values == brute;
      std::vector<Cyclotomic> ind_values(brute.begin(), brute.end());
      for (std::size_t row = 0; row < t.size(); ++row) {
        const Cyclotomic lhs = inner_product(t, t.rows[row], ind_values);
        const Cyclotomic rhs = brute_fixed_dim(*g, t.rows[row], m);
        ok = ok && lhs == rhs && rhs == Cyclotomic(fixed_dim(t, row, m)) &&
             frobenius_reciprocity_check(t, row, m);
      }
    }
    c.expect(ok, preset_name(id));
  }
}

void lattice_suite(Checker& c) {
  for (const auto& id : {PresetId{"S", 4}, PresetId{"Q8", std::nullopt}, PresetId{"D", 5}}) {
    const std::string tag = preset_name(id) + ": ";
    const auto g = make_preset(id);
    const auto a = analysis_for(g, true);
    const auto lattice = regular_lattice(g);
    const auto cert = isotypical_sublattices(lattice, a.central);
    std::size_t total = 0;
    for (std::size_t i = 0; i < a.orbits.size(); ++i) {
      const auto& od = a.orbits[i];
      const long deg = a.table.degrees[od.character.representative()];
      const auto expected = od.character.d * static_cast<std::size_t>(deg * deg);
      c.expect(cert.ranks[i] == expected, tag + "rank of component " + std::to_string(i));
      total += cert.ranks[i];
      const auto prim = primitive_sublattices(lattice, od.decomposition);
      c.expect(static_cast<long>(prim.ranks.size()) == od.n, tag + "n primitive sublattices");
      std::size_t prim_total = 0;
      for (auto rk : prim.ranks) {
        c.expect(rk == prim.ranks.front() && rk > 0, tag + "equal primitive ranks");
        prim_total += rk;
      }
      c.expect(prim_total == cert.ranks[i] && prim.isotypical_rank == cert.ranks[i],
               tag + "primitive ranks sum");
    }
    c.expect(total == g->order(), tag + "rank sum");
    c.expect(cert.index > 0, tag + "finite index");
    // The stacked bases are square exactly when the ranks add up; recompute the index.
    std::vector<std::vector<Integer>> cols;
    for (const auto& b : cert.bases) {
      for (std::size_t j = 0; j < b.cols(); ++j) cols.push_back(b.column(j));
    }
    Integer det = determinant(IntMatrix::from_columns(cols, lattice.rank));
    if (det < 0) det = -det;
    c.expect(det == cert.index, tag + "index equals |det|");
    for (std::size_t i = 0; i < cert.bases.size(); ++i) {
      for (std::size_t j = 0; j < cert.bases.size(); ++j) {
        if (i == j) continue;
        c.expect(hom_vanishing_check(lattice, cert, i, j),
                 tag + "Hom vanishes " + std::to_string(i) + "," + std::to_string(j));
        c.expect(hom_dimension(lattice, cert.bases[i], cert.bases[j]) == 0,
                 tag + "hom dimension 0");
      }
    }
  }
}

void table_suite(Checker& c) {
  for (const auto& id : preset_groups()) {
    const std::string tag = preset_name(id) + ": ";
    const auto g = make_preset(id);
    if (g->order() > 120) continue;
    const auto t = character_table(g);
    const auto& classes = g->conjugacy_classes();
    const std::size_t k = classes.size();
    c.expect(t.size() == k, tag + "square table");
    long deg_sq = 0;
    for (long d : t.degrees) deg_sq += d * d;
    c.expect(deg_sq == static_cast<long>(g->order()), tag + "sum of squared degrees");
    const Cyclotomic order(static_cast<long>(g->order()));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        Cyclotomic rows;
        Cyclotomic cols;
        for (std::size_t l = 0; l < k; ++l) {
          rows += (t.rows[i][l] * t.rows[j][l].conj())
                      .scaled(Rational(static_cast<long>(classes[l].elements.size())));
          cols += t.rows[l][i] * t.rows[l][j].conj();
        }
        c.expect(rows == (i == j ? order : Cyclotomic(0)), tag + "row orthogonality");
        const Cyclotomic centraliser(
            i == j ? Rational(static_cast<long>(g->order() / classes[i].elements.size())) : 0);
        c.expect(cols == centraliser, tag + "column orthogonality");
      }
    }
    if (g->order() <= kOracleOrderLimit) {
      c.expect(oracle::tables_match(t, oracle::numeric_character_table(*g), kOracleTolerance),
               tag + "numeric oracle");
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "S4 end-to-end decomposition and character data", 5.0, s4_end_to_end},
      {2, "A5 identifications with exponents (4,5,3)", 30.0, a5},
      {3, "D_p for p in {3,5,7}", 0.0, dihedral_odd},
      {4, "Q8 decomposition, End_G(W), Schur index, indicator", 0.0, quaternion},
      {5, "D_2p for p in {5,7}, faithful orbit not an intermediate Prym", 60.0, dihedral_even},
      {6, "central idempotent laws for every preset", 0.0, idempotent_suite},
      {7, "Schur-relation idempotents for S3 and S4 standard representations", 0.0,
       schur_relation_suite},
      {8, "Frobenius reciprocity for every preset, character and subgroup", 0.0, frobenius_suite},
      {9, "lattice certificates on Z[G] for S4, Q8, D5", 0.0, lattice_suite},
      {10, "character table validity and numeric oracle", 0.0, table_suite},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checker checker;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(checker);
    } catch (const std::exception& e) {
      checker.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.time_limit > 0 && secs >= cr.time_limit) {
      std::ostringstream os;
      os << "runtime " << secs << " s exceeds " << cr.time_limit << " s";
      checker.expect(false, os.str());
    }
    std::cout << (checker.ok() ? "[PASS] " : "[FAIL] ") << cr.number << " " << cr.description
              << " (" << std::fixed << std::setprecision(2) << secs << " s)\n";
    for (const auto& f : checker.failures()) std::cout << "       " << f << "\n";
    failed += !checker.ok();
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
