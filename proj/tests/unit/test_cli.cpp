#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "jacdecomp/cli.hpp"

using namespace jacdecomp;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("jacdecomp-test-" + std::to_string(std::rand()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

RunConfig config(const std::string& verb, const std::string& group, bool use_json = true) {
  RunConfig c;
  c.verb = verb;
  c.group_spec = group;
  c.format = use_json ? OutputFormat::Json : OutputFormat::Text;
  c.use_cache = false;
  return c;
}

json run_json(const RunConfig& c) {
  const auto r = run(c);
  REQUIRE(r.exit_code == kExitOk);
  return json::parse(r.output);
}

}  // namespace

TEST_CASE("chartable JSON") {
  const auto j = run_json(config("chartable", "S:3"));
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["version"] == kVersion);
  CHECK(j["verb"] == "chartable");
  CHECK(j["group"]["order"] == 6);
  CHECK(j["class_sizes"] == json({1, 2, 3}));
  CHECK(j["degrees"] == json({1, 1, 2}));
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][2][1]["text"] == "-1");
  CHECK(j["fs_indicators"] == json({1, 1, 1}));
  CHECK(j["orbits"].size() == 3);
}

TEST_CASE("decompose JSON for Q8 lists five factors") {
  const auto j = run_json(config("decompose", "Q8"));
  REQUIRE(j["factors"].size() == 5);
  CHECK(j["factors"][0]["rendered"] == "JY");
  CHECK(j["factors"][4]["m"] == 2);
  CHECK(j["factors"][4]["rendered"] == "P(X/X_{<-1>})");
  CHECK(j["derived_exponent_rule"] == true);
}

TEST_CASE("pryms and lattice-check") {
  auto c = config("pryms", "S:4");
  c.sub = "Z";
  c.super = "D4";
  const auto j = run_json(c);
  CHECK(j["rendered"] == "P(X_{Z}/X_{D4}) ~ B_5");
  auto l = config("lattice-check", "D:5");
  const auto lj = run_json(l);
  CHECK(lj["passed"] == true);
  l.perm_subgroup = "<s>";
  CHECK(run_json(l)["passed"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run(config("chartable", "X:3")).exit_code == kExitUsage);
  CHECK(run(config("frobnicate", "S:3")).exit_code == kExitUsage);
  CHECK(run(config("chartable", "S:9")).exit_code == kExitBound);
  auto bounded = config("chartable", "S:5");
  bounded.order_bound = 60;
  CHECK(run(bounded).exit_code == kExitBound);
  auto bad_pair = config("pryms", "S:4");
  bad_pair.sub = "D4";
  bad_pair.super = "Z";
  const auto r = run(bad_pair);
  CHECK(r.exit_code == kExitUsage);
  CHECK_FALSE(r.error.empty());
  CHECK(run(config("subgroups", "Q8", false)).exit_code == kExitOk);
}

TEST_CASE("cache reuse, tamper detection, and key layout") {
  TempDir dir;
  ArtifactCache cache(dir.path);
  CHECK(cache.path_for("chartable", "S:4").filename().string().rfind("chartable-", 0) == 0);
  CHECK(cache.path_for("chartable", "S:4") != cache.path_for("chartable", "S:3"));
  CHECK(fnv1a("") == 14695981039346656037ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);

  auto c = config("decompose", "S:4");
  c.use_cache = true;
  c.cache_dir = dir.path;
  const auto first = run(c);
  const auto table_path = cache.path_for("chartable", "S:4");
  REQUIRE(fs::exists(table_path));
  REQUIRE(fs::exists(cache.path_for("subgroups", "S:4")));
  const auto second = run(c);
  CHECK(first.output == second.output);

  const auto g = parse_group_spec("S:4");
  CHECK(cache.character_table(g, "S:4", kDefaultSeed).rows.size() == 5);
  CHECK(cache.hits() == 1);

  // Corrupt one stored character value; the entry must be rejected and recomputed.
  json entry;
  {
    std::ifstream in(table_path);
    in >> entry;
  }
  entry["data"]["rows"][1][1]["coeffs"][0] = "5";
  {
    std::ofstream out(table_path);
    out << entry.dump();
  }
  ArtifactCache fresh(dir.path);
  const auto t = fresh.character_table(parse_group_spec("S:4"), "S:4", kDefaultSeed);
  CHECK(fresh.rejected() == 1);
  CHECK(t.rows == character_table(parse_group_spec("S:4")).rows);
  CHECK(run(c).output == first.output);

  // A subgroup list with a missing member is rejected too.
  json subs;
  {
    std::ifstream in(cache.path_for("subgroups", "S:4"));
    in >> subs;
  }
  subs["data"]["subgroups"].erase(3);
  {
    std::ofstream out(cache.path_for("subgroups", "S:4"));
    out << subs.dump();
  }
  ArtifactCache third(dir.path);
  const auto g2 = parse_group_spec("S:4");
  third.subgroup_lattice(g2, "S:4");
  CHECK(third.rejected() == 1);
  CHECK(g2->subgroup_lattice().subgroups.size() == 30);
}

TEST_CASE("cached and uncached output agree for every verb") {
  TempDir dir;
  for (const auto& verb : verbs()) {
    CAPTURE(verb);
    auto c = config(verb, "A:4");
    if (verb == "pryms") {
      c.sub = "1";
      c.super = "G";
    }
    const auto plain = run(c);
    c.use_cache = true;
    c.cache_dir = dir.path;
    CHECK(run(c).output == plain.output);
    CHECK(run(c).output == plain.output);
  }
}
