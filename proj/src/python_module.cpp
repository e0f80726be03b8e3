#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jacdecomp/cli.hpp"
#include "jacdecomp/error.hpp"
#include "jacdecomp/lattice.hpp"
#include "jacdecomp/prym.hpp"
#include "jacdecomp/qalgebra.hpp"

namespace py = pybind11;
using namespace jacdecomp;

namespace {

std::string value_string(const Cyclotomic& c) {
  if (auto q = c.is_rational()) return q->get_str();
  return c.to_string();
}

py::dict character_table_py(const std::string& spec, std::uint64_t seed) {
  const GroupPtr g = parse_group_spec(spec);
  CharacterTableOptions opts;
  opts.seed = seed;
  const CharacterTable t = character_table(g, opts);
  py::list classes;
  for (const auto& c : g->conjugacy_classes()) {
    classes.append(py::make_tuple(g->element(c.representative).cycle_string(), c.elements.size()));
  }
  py::list rows;
  for (const auto& r : t.rows) {
    py::list values;
    for (const auto& v : r) values.append(value_string(v));
    rows.append(values);
  }
  py::list orbits;
  for (const auto& rc : galois_orbits(t)) orbits.append(rc.members);
  py::dict out;
  out["order"] = g->order();
  out["classes"] = classes;
  out["degrees"] = t.degrees;
  out["rows"] = rows;
  out["orbits"] = orbits;
  return out;
}

py::dict decompose_py(const std::string& spec, std::uint64_t seed) {
  const GroupPtr g = parse_group_spec(spec);
  CharacterTableOptions opts;
  opts.seed = seed;
  const AlgebraAnalysis an = analyze_algebra(character_table(g, opts), seed, false);
  DecomposeOptions dopts;
  dopts.seed = seed;
  const DecompositionReport rep = decompose(an, dopts);
  py::list factors;
  for (const auto& f : rep.factors) {
    py::dict d;
    d["orbit"] = f.orbit;
    d["degree"] = f.degree;
    d["d"] = f.d;
    d["m"] = f.m;
    d["n"] = f.n;
    d["status"] = to_string(f.kind);
    if (f.sub) {
      d["sub"] = subgroup_label(*g, *f.sub);
      d["super"] = subgroup_label(*g, *f.super);
      d["orbit_difference_criterion"] = f.orbit_difference;
    }
    factors.append(d);
  }
  py::dict out;
  out["formula"] = rep.formula;
  out["factors"] = factors;
  out["notes"] = rep.notes;
  out["caveats"] = rep.caveats;
  return out;
}

std::vector<long> prym_exponents_py(const std::string& spec, const std::string& sub,
                                    const std::string& super, std::uint64_t seed) {
  const GroupPtr g = parse_group_spec(spec);
  CharacterTableOptions opts;
  opts.seed = seed;
  const AlgebraAnalysis an = analyze_algebra(character_table(g, opts), seed, false);
  const PrymContext ctx = PrymContext::from_analysis(an);
  return prym_exponents(ctx, parse_subgroup_spec(*g, sub), parse_subgroup_spec(*g, super)).s;
}

py::dict idempotents_py(const std::string& spec, std::uint64_t seed) {
  const GroupPtr g = parse_group_spec(spec);
  CharacterTableOptions opts;
  opts.seed = seed;
  const AlgebraAnalysis an = analyze_algebra(character_table(g, opts), seed, true);
  verify_central_system(an.central);
  py::list orbits;
  for (const auto& od : an.orbits) {
    py::dict d;
    d["d"] = od.character.d;
    d["m"] = od.m;
    d["n"] = od.n;
    d["endomorphism_dim"] = od.endo_dim;
    d["indicator"] = od.fs;
    py::dict e;
    for (const auto& [x, q] : od.e.coeffs()) e[py::int_(x)] = q.get_str();
    d["central_idempotent"] = e;
    d["primitive_count"] = od.decomposition.idempotents.size();
    orbits.append(d);
  }
  return py::dict(py::arg("orbits") = orbits);
}

std::vector<std::size_t> isotypical_ranks_py(const std::string& spec, std::uint64_t seed) {
  const GroupPtr g = parse_group_spec(spec);
  CharacterTableOptions opts;
  opts.seed = seed;
  const CharacterTable t = character_table(g, opts);
  const auto system = central_idempotents(t, galois_orbits(t));
  return isotypical_sublattices(regular_lattice(g), system).ranks;
}

py::tuple run_py(const std::string& verb, const std::string& group, const std::string& format,
                 std::uint64_t seed, std::optional<std::string> cache_dir, bool use_cache,
                 const std::string& sub, const std::string& super,
                 const std::string& perm_subgroup, std::size_t order_bound) {
  RunConfig c;
  c.verb = verb;
  c.group_spec = group;
  if (format == "json") {
    c.format = OutputFormat::Json;
  } else if (format != "text") {
    throw UsageError("format must be text or json");
  }
  c.seed = seed;
  if (cache_dir) c.cache_dir = *cache_dir;
  c.use_cache = use_cache;
  c.sub = sub;
  c.super = super;
  c.perm_subgroup = perm_subgroup;
  c.order_bound = order_bound;
  const RunResult r = run(c);
  return py::make_tuple(r.exit_code, r.output, r.error);
}

}  // namespace

PYBIND11_MODULE(_jacdecomp, m) {
  m.doc() = "Exact group-algebra and character computations for Jacobian decompositions";
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);
  py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);

  m.attr("__version__") = kVersion;
  m.attr("DEFAULT_SEED") = kDefaultSeed;

  m.def("group_order", [](const std::string& spec) { return parse_group_spec(spec)->order(); },
        py::arg("spec"));
  m.def("subgroup_count",
        [](const std::string& spec) { return parse_group_spec(spec)->subgroup_lattice().subgroups.size(); },
        py::arg("spec"));
  m.def("character_table", &character_table_py, py::arg("spec"), py::arg("seed") = kDefaultSeed);
  m.def("idempotents", &idempotents_py, py::arg("spec"), py::arg("seed") = kDefaultSeed);
  m.def("decompose", &decompose_py, py::arg("spec"), py::arg("seed") = kDefaultSeed);
  m.def("prym_exponents", &prym_exponents_py, py::arg("spec"), py::arg("sub"), py::arg("super"),
        py::arg("seed") = kDefaultSeed);
  m.def("isotypical_ranks", &isotypical_ranks_py, py::arg("spec"), py::arg("seed") = kDefaultSeed);
  m.def("run", &run_py, py::arg("verb"), py::arg("group"), py::arg("format") = "json",
        py::arg("seed") = kDefaultSeed, py::arg("cache_dir") = py::none(),
        py::arg("use_cache") = false, py::arg("sub") = "", py::arg("super") = "",
        py::arg("perm_subgroup") = "", py::arg("order_bound") = kDefaultOrderBound);
}
