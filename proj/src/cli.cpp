#include "jacdecomp/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "jacdecomp/error.hpp"
#include "jacdecomp/lattice.hpp"
#include "jacdecomp/prym.hpp"
#include "jacdecomp/qalgebra.hpp"

namespace jacdecomp {

using Json = nlohmann::ordered_json;

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v = {"chartable", "idempotents", "subgroups",
                                             "pryms",     "decompose",   "lattice-check"};
  return v;
}

namespace {

struct Context {
  const RunConfig& config;
  GroupPtr group;
  ArtifactCache cache;
};

std::string value_string(const Cyclotomic& c) {
  if (auto q = c.is_rational()) return q->get_str();
  return c.to_string();
}

Json cyclotomic_json(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(q.get_str());
  return {{"n", c.conductor()}, {"coeffs", coeffs}, {"text", value_string(c)}};
}

std::string factor_name(std::size_t orbit) { return "B_" + std::to_string(orbit + 1); }

Json header(const Context& ctx) {
  const auto& g = *ctx.group;
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["version"] = kVersion;
  j["verb"] = ctx.config.verb;
  j["group"] = {{"spec", ctx.config.group_spec},
                {"name", g.name()},
                {"order", g.order()},
                {"degree", g.degree()}};
  j["seed"] = ctx.config.seed;
  return j;
}

std::string text_header(const Context& ctx) {
  std::ostringstream os;
  os << "group " << ctx.config.group_spec << " (" << ctx.group->name() << "), order "
     << ctx.group->order() << ", seed " << ctx.config.seed << "\n";
  return os.str();
}

Json subgroup_json(const FiniteGroup& g, const Subgroup& h) {
  Json gens = Json::array();
  for (auto x : g.generating_set(h)) gens.push_back(g.element(x).cycle_string());
  Json j = {{"order", h.order()}, {"generators", gens}, {"label", subgroup_label(g, h)}};
  if (auto name = g.conventional_name(h)) {
    j["name"] = *name;
  } else {
    j["name"] = nullptr;
  }
  return j;
}

Json sparse_json(const GroupAlgebraElement& a) {
  Json j = Json::object();
  for (const auto& [x, q] : a.coeffs()) j[std::to_string(x)] = q.get_str();
  return j;
}

std::string sparse_text(const GroupAlgebraElement& a) {
  const auto& g = *a.group();
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, q] : a.coeffs()) {
    if (!first) os << (sgn(q) < 0 ? " - " : " + ");
    else if (sgn(q) < 0) os << "-";
    first = false;
    os << Rational(abs(q)).get_str() << "*" << g.element(x).cycle_string();
  }
  if (first) os << "0";
  return os.str();
}

Json orbit_members_json(const RationalCharacter& rc) {
  Json m = Json::array();
  for (auto r : rc.members) m.push_back(r);
  return m;
}

CharacterTable load_table(Context& ctx) {
  return ctx.cache.character_table(ctx.group, ctx.config.group_spec, ctx.config.seed);
}

// ---- chartable -------------------------------------------------------------------------------

RunResult chartable(Context& ctx) {
  const CharacterTable t = load_table(ctx);
  const auto& g = *ctx.group;
  const auto orbits = galois_orbits(t);
  const auto& classes = g.conjugacy_classes();
  if (ctx.config.format == OutputFormat::Json) {
    Json j = header(ctx);
    j["prime"] = t.prime;
    Json reps = Json::array(), sizes = Json::array(), orders = Json::array();
    for (const auto& c : classes) {
      reps.push_back(g.element(c.representative).cycle_string());
      sizes.push_back(c.elements.size());
      orders.push_back(g.element_order(c.representative));
    }
    j["class_reps"] = reps;
    j["class_sizes"] = sizes;
    j["class_element_orders"] = orders;
    j["degrees"] = t.degrees;
    Json rows = Json::array();
    Json fs = Json::array();
    for (std::size_t r = 0; r < t.size(); ++r) {
      Json values = Json::array();
      for (const auto& v : t.rows[r]) values.push_back(cyclotomic_json(v));
      rows.push_back(values);
      fs.push_back(frobenius_schur(t, r));
    }
    j["rows"] = rows;
    j["fs_indicators"] = fs;
    Json rcs = Json::array();
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      Json summed = Json::array();
      for (const auto& q : orbits[i].summed) summed.push_back(q.get_str());
      rcs.push_back({{"name", factor_name(i)},
                     {"members", orbit_members_json(orbits[i])},
                     {"d", orbits[i].d},
                     {"summed", summed}});
    }
    j["orbits"] = rcs;
    return {kExitOk, j.dump(2) + "\n", ""};
  }
  std::ostringstream os;
  os << text_header(ctx);
  os << "classes:\n";
  for (std::size_t k = 0; k < classes.size(); ++k) {
    os << "  C" << k << "  size " << classes[k].elements.size() << "  order "
       << g.element_order(classes[k].representative) << "  "
       << g.element(classes[k].representative).cycle_string() << "\n";
  }
  os << "characters (" << t.size() << "):\n";
  for (std::size_t r = 0; r < t.size(); ++r) {
    os << "  chi_" << r << "  [";
    for (std::size_t k = 0; k < t.rows[r].size(); ++k) {
      if (k) os << ", ";
      os << value_string(t.rows[r][k]);
    }
    os << "]  indicator " << frobenius_schur(t, r) << "\n";
  }
  os << "rational characters (" << orbits.size() << "):\n";
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    os << "  " << factor_name(i) << "  members {";
    for (std::size_t k = 0; k < orbits[i].members.size(); ++k) {
      if (k) os << ", ";
      os << "chi_" << orbits[i].members[k];
    }
    os << "}  d " << orbits[i].d << "\n";
  }
  return {kExitOk, os.str(), ""};
}

// ---- idempotents -----------------------------------------------------------------------------

RunResult idempotents(Context& ctx) {
  const CharacterTable t = load_table(ctx);
  const AlgebraAnalysis an = analyze_algebra(t, ctx.config.seed, true);
  verify_central_system(an.central);
  const auto& g = *ctx.group;
  if (ctx.config.format == OutputFormat::Json) {
    Json j = header(ctx);
    Json elems = Json::array();
    for (const auto& p : g.elements()) elems.push_back(p.cycle_string());
    j["elements"] = elems;
    Json orbits = Json::array();
    for (std::size_t i = 0; i < an.orbits.size(); ++i) {
      const auto& od = an.orbits[i];
      Json prims = Json::array();
      for (const auto& p : od.decomposition.idempotents) prims.push_back(sparse_json(p));
      orbits.push_back({{"name", factor_name(i)},
                        {"members", orbit_members_json(od.character)},
                        {"degree", t.degrees[od.character.representative()]},
                        {"d", od.character.d},
                        {"m", od.m},
                        {"n", od.n},
                        {"indicator", od.fs},
                        {"endomorphism_dim", od.endo_dim},
                        {"module_dim", od.module.dim},
                        {"module_seed", od.module.seed},
                        {"decomposition_seed", od.decomposition.seed},
                        {"central_idempotent", sparse_json(od.e)},
                        {"primitive_idempotents", prims}});
    }
    j["orbits"] = orbits;
    j["checks"] = {{"central_system", true}, {"primitive_certified", true}};
    return {kExitOk, j.dump(2) + "\n", ""};
  }
  std::ostringstream os;
  os << text_header(ctx);
  os << "central idempotent system verified (e_i^2 = e_i, e_i e_j = 0, sum = 1, central)\n";
  for (std::size_t i = 0; i < an.orbits.size(); ++i) {
    const auto& od = an.orbits[i];
    os << factor_name(i) << ": deg " << t.degrees[od.character.representative()] << ", d "
       << od.character.d << ", m " << od.m << ", n " << od.n << ", indicator " << od.fs
       << ", dim End_G(W) " << od.endo_dim << ", dim W " << od.module.dim << "\n";
    os << "  e = " << sparse_text(od.e) << "\n";
    for (std::size_t k = 0; k < od.decomposition.idempotents.size(); ++k) {
      os << "  p_" << (k + 1) << " = " << sparse_text(od.decomposition.idempotents[k]) << "\n";
    }
  }
  return {kExitOk, os.str(), ""};
}

// ---- subgroups -------------------------------------------------------------------------------

RunResult subgroups(Context& ctx) {
  ctx.cache.subgroup_lattice(ctx.group, ctx.config.group_spec);
  const auto& g = *ctx.group;
  const auto& lat = g.subgroup_lattice();
  if (ctx.config.format == OutputFormat::Json) {
    Json j = header(ctx);
    j["count"] = lat.subgroups.size();
    j["class_count"] = lat.classes.size();
    Json classes = Json::array();
    for (const auto& cls : lat.classes) {
      Json c = subgroup_json(g, lat.subgroups[cls.front()]);
      c["class_size"] = cls.size();
      classes.push_back(c);
    }
    j["classes"] = classes;
    return {kExitOk, j.dump(2) + "\n", ""};
  }
  std::ostringstream os;
  os << text_header(ctx);
  os << lat.subgroups.size() << " subgroups in " << lat.classes.size() << " conjugacy classes\n";
  for (const auto& cls : lat.classes) {
    const Subgroup& h = lat.subgroups[cls.front()];
    os << "  order " << h.order() << "  x" << cls.size() << "  " << subgroup_label(g, h) << "\n";
  }
  return {kExitOk, os.str(), ""};
}

// ---- pryms -----------------------------------------------------------------------------------

RunResult pryms(Context& ctx) {
  if (ctx.config.sub.empty() || ctx.config.super.empty()) {
    throw UsageError("pryms needs --sub and --super");
  }
  const auto& g = *ctx.group;
  const Subgroup m = parse_subgroup_spec(g, ctx.config.sub);
  const Subgroup n = parse_subgroup_spec(g, ctx.config.super);
  const CharacterTable t = load_table(ctx);
  const AlgebraAnalysis an = analyze_algebra(t, ctx.config.seed, false);
  const PrymContext pc = PrymContext::from_analysis(an);
  const PrymExponentVector s = prym_exponents(pc, m, n);
  const auto dm = pc.fixed_dims(m);
  const auto dn = pc.fixed_dims(n);
  std::optional<std::size_t> unit;
  for (std::size_t i = 1; i < s.s.size(); ++i) {
    if (s.is_unit_at(i)) unit = i;
  }
  std::ostringstream prod;
  bool any = false;
  for (std::size_t i = 1; i < s.s.size(); ++i) {
    if (s.s[i] == 0) continue;
    if (any) prod << " x ";
    any = true;
    prod << factor_name(i);
    if (s.s[i] != 1) prod << "^" << s.s[i];
  }
  const std::string rendered = "P(" + quotient_label(g, m) + "/" + quotient_label(g, n) + ") ~ " +
                               (any ? prod.str() : std::string("0"));
  if (ctx.config.format == OutputFormat::Json) {
    Json j = header(ctx);
    j["sub"] = subgroup_json(g, m);
    j["super"] = subgroup_json(g, n);
    Json comps = Json::array();
    for (std::size_t i = 1; i < s.s.size(); ++i) {
      comps.push_back({{"name", factor_name(i)},
                       {"members", orbit_members_json(pc.orbits()[i])},
                       {"m", pc.schur_indices()[i]},
                       {"fixed_dim_sub", dm[i]},
                       {"fixed_dim_super", dn[i]},
                       {"s", s.s[i]},
                       {"orbit_difference_criterion", orbit_difference_criterion(pc, m, n, i)}});
    }
    j["exponents"] = comps;
    j["unit_at"] = unit ? Json(factor_name(*unit)) : Json(nullptr);
    j["rendered"] = rendered;
    j["derived_exponent_rule"] = true;
    return {kExitOk, j.dump(2) + "\n", ""};
  }
  std::ostringstream os;
  os << text_header(ctx);
  os << "M = " << subgroup_label(g, m) << " (order " << m.order() << "), N = "
     << subgroup_label(g, n) << " (order " << n.order() << ")\n";
  for (std::size_t i = 1; i < s.s.size(); ++i) {
    os << "  " << factor_name(i) << ": dim V^M " << dm[i] << ", dim V^N " << dn[i] << ", m "
       << pc.schur_indices()[i] << ", s " << s.s[i]
       << (orbit_difference_criterion(pc, m, n, i) ? "  [orbit-difference criterion holds]" : "")
       << "\n";
  }
  os << "exponents use the derived rule s_i = (dim V_i^M - dim V_i^N) / m_i\n";
  os << rendered << "\n";
  return {kExitOk, os.str(), ""};
}

// ---- decompose -------------------------------------------------------------------------------

std::string pair_text(const FiniteGroup& g, const FactorIdentification& f) {
  return "P(" + quotient_label(g, *f.sub) + "/" + quotient_label(g, *f.super) + ")";
}

RunResult decompose_verb(Context& ctx) {
  ctx.cache.subgroup_lattice(ctx.group, ctx.config.group_spec);
  const CharacterTable t = load_table(ctx);
  const AlgebraAnalysis an = analyze_algebra(t, ctx.config.seed, false);
  DecomposeOptions opts;
  opts.seed = ctx.config.seed;
  const DecompositionReport rep = decompose(an, opts);
  const auto& g = *ctx.group;
  if (ctx.config.format == OutputFormat::Json) {
    Json j = header(ctx);
    Json factors = Json::array();
    const auto& triv = an.orbits.front();
    factors.push_back({{"name", factor_name(0)},
                       {"members", orbit_members_json(triv.character)},
                       {"degree", 1},
                       {"d", 1},
                       {"m", 1},
                       {"n", 1},
                       {"status", "QuotientJacobian"},
                       {"rendered", "JY"}});
    for (const auto& f : rep.factors) {
      Json item = {{"name", factor_name(f.orbit)},
                   {"members", orbit_members_json(an.orbits[f.orbit].character)},
                   {"degree", f.degree},
                   {"d", f.d},
                   {"m", f.m},
                   {"n", f.n},
                   {"status", to_string(f.kind)}};
      if (f.kind == IdentificationKind::PrymOf) {
        item["sub"] = subgroup_json(g, *f.sub);
        item["super"] = subgroup_json(g, *f.super);
        item["rendered"] = pair_text(g, f);
        item["orbit_difference_criterion"] = f.orbit_difference;
        item["candidate_pairs"] = f.candidate_pairs;
      } else {
        item["rendered"] = factor_name(f.orbit);
      }
      factors.push_back(item);
    }
    j["factors"] = factors;
    j["formula"] = rep.formula;
    j["derived_exponent_rule"] = rep.derived_exponent_rule;
    j["notes"] = rep.notes;
    j["caveats"] = rep.caveats;
    return {kExitOk, j.dump(2) + "\n", ""};
  }
  std::ostringstream os;
  os << text_header(ctx);
  os << "rational irreducible characters: " << an.orbits.size() << "\n";
  os << "  " << factor_name(0) << "  deg 1, d 1, m 1, n 1  JY\n";
  for (const auto& f : rep.factors) {
    os << "  " << factor_name(f.orbit) << "  deg " << f.degree << ", d " << f.d << ", m " << f.m
       << ", n " << f.n << "  ";
    if (f.kind == IdentificationKind::PrymOf) {
      os << pair_text(g, f) << "  (M = " << subgroup_label(g, *f.sub)
         << ", N = " << subgroup_label(g, *f.super) << ")";
      if (f.orbit_difference) os << "  [orbit-difference criterion holds]";
    } else {
      os << to_string(f.kind);
    }
    os << "\n";
  }
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
  for (const auto& c : rep.caveats) os << "caveat: " << c << "\n";
  os << rep.formula << "\n";
  return {kExitOk, os.str(), ""};
}

// ---- lattice-check ---------------------------------------------------------------------------

RunResult lattice_check(Context& ctx) {
  const auto& g = *ctx.group;
  const CharacterTable t = load_table(ctx);
  const AlgebraAnalysis an = analyze_algebra(t, ctx.config.seed, true);
  std::optional<Subgroup> perm;
  if (!ctx.config.perm_subgroup.empty()) perm = parse_subgroup_spec(g, ctx.config.perm_subgroup);
  const IntegralGLattice lattice =
      perm ? permutation_lattice(ctx.group, *perm) : regular_lattice(ctx.group);
  const SublatticeCertificate cert = isotypical_sublattices(lattice, an.central);

  bool ok = true;
  std::vector<long> expected;
  if (!perm) {
    for (const auto& od : an.orbits) {
      const long deg = t.degrees[od.character.representative()];
      expected.push_back(static_cast<long>(od.character.d) * deg * deg);
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (static_cast<long>(cert.ranks[i]) != expected[i]) ok = false;
    }
  }
  struct HomCheck {
    std::size_t i, j;
    bool vanishes;
  };
  std::vector<HomCheck> homs;
  for (std::size_t i = 0; i < cert.bases.size(); ++i) {
    for (std::size_t j = 0; j < cert.bases.size(); ++j) {
      if (i == j) continue;
      const bool v = hom_vanishing_check(lattice, cert, i, j);
      if (!v) ok = false;
      homs.push_back({i, j, v});
    }
  }
  std::vector<PrimitiveSublattices> prims;
  for (const auto& od : an.orbits) prims.push_back(primitive_sublattices(lattice, od.decomposition));

  RunResult result;
  result.exit_code = ok ? kExitOk : kExitFailure;
  if (!ok) result.error = "lattice certificate failed";
  if (ctx.config.format == OutputFormat::Json) {
    Json j = header(ctx);
    j["lattice"] = {{"kind", perm ? "permutation" : "regular"}, {"rank", lattice.rank}};
    if (perm) j["lattice"]["subgroup"] = subgroup_json(g, *perm);
    j["ranks"] = cert.ranks;
    if (!perm) j["expected_ranks"] = expected;
    j["index"] = cert.index.get_str();
    Json hc = Json::array();
    for (const auto& h : homs) {
      hc.push_back({{"i", factor_name(h.i)}, {"j", factor_name(h.j)}, {"vanishes", h.vanishes}});
    }
    j["hom_checks"] = hc;
    Json pj = Json::array();
    for (std::size_t i = 0; i < prims.size(); ++i) {
      pj.push_back({{"name", factor_name(i)},
                    {"ranks", prims[i].ranks},
                    {"isotypical_rank", prims[i].isotypical_rank}});
    }
    j["primitive"] = pj;
    j["passed"] = ok;
    result.output = j.dump(2) + "\n";
    return result;
  }
  std::ostringstream os;
  os << text_header(ctx);
  os << (perm ? "permutation lattice on cosets of " + subgroup_label(g, *perm) : "regular lattice")
     << ", rank " << lattice.rank << "\n";
  std::size_t sum = 0;
  for (std::size_t i = 0; i < cert.ranks.size(); ++i) {
    os << "  " << factor_name(i) << ": isotypical rank " << cert.ranks[i];
    if (!perm) os << " (expected " << expected[i] << ")";
    os << ", primitive ranks [";
    for (std::size_t k = 0; k < prims[i].ranks.size(); ++k) {
      if (k) os << ", ";
      os << prims[i].ranks[k];
    }
    os << "]\n";
    sum += cert.ranks[i];
  }
  os << "rank sum " << sum << ", direct-sum index " << cert.index.get_str() << "\n";
  const std::size_t vanishing =
      std::count_if(homs.begin(), homs.end(), [](const HomCheck& h) { return h.vanishes; });
  os << "Hom_G vanishing between distinct components: " << vanishing << "/" << homs.size() << "\n";
  os << (ok ? "certificate passed" : "certificate FAILED") << "\n";
  result.output = os.str();
  return result;
}

}  // namespace

RunResult run(const RunConfig& config) {
  try {
    const auto& vs = verbs();
    if (std::find(vs.begin(), vs.end(), config.verb) == vs.end()) {
      throw UsageError("unknown verb '" + config.verb + "'");
    }
    if (config.group_spec.empty()) throw UsageError("--group is required");
    std::optional<std::filesystem::path> dir;
    if (config.use_cache) dir = config.cache_dir ? *config.cache_dir : default_cache_dir();
    Context ctx{config, parse_group_spec(config.group_spec, config.order_bound), ArtifactCache(dir)};
    if (config.verb == "chartable") return chartable(ctx);
    if (config.verb == "idempotents") return idempotents(ctx);
    if (config.verb == "subgroups") return subgroups(ctx);
    if (config.verb == "pryms") return pryms(ctx);
    if (config.verb == "decompose") return decompose_verb(ctx);
    return lattice_check(ctx);
  } catch (const UsageError& e) {
    return {kExitUsage, "", std::string("usage error: ") + e.what()};
  } catch (const BoundExceeded& e) {
    return {kExitBound, "", std::string("bound exceeded: ") + e.what()};
  } catch (const InvariantError& e) {
    return {kExitFailure, "", std::string("computation failed: ") + e.what()};
  } catch (const std::exception& e) {
    return {kExitFailure, "", std::string("computation failed: ") + e.what()};
  }
}

}  // namespace jacdecomp
