#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "jacdecomp/cli.hpp"
#include "jacdecomp/error.hpp"

namespace jacdecomp {

using nlohmann::json;

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("JACDECOMP_CACHE_DIR"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "jacdecomp";
  }
  return std::filesystem::temp_directory_path() / "jacdecomp-cache";
}

ArtifactCache::ArtifactCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

std::filesystem::path ArtifactCache::path_for(const std::string& kind,
                                              const std::string& spec) const {
  if (!dir_) throw UsageError("cache disabled");
  std::ostringstream name;
  name << kind << "-" << std::hex << std::setw(16) << std::setfill('0')
       << fnv1a(kind + '\n' + spec + '\n' + kVersion) << ".json";
  return *dir_ / name.str();
}

namespace {

std::optional<json> read_entry(const std::filesystem::path& path, const std::string& kind,
                               const std::string& spec) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw InvariantError("unreadable cache entry");
  if (j.value("kind", "") != kind || j.value("spec", "") != spec ||
      j.value("version", "") != kVersion) {
    throw InvariantError("cache entry does not match its key");
  }
  return j;
}

void write_entry(const std::filesystem::path& path, const std::string& kind,
                 const std::string& spec, json data) {
  try {
    std::filesystem::create_directories(path.parent_path());
    json j = {{"kind", kind}, {"spec", spec}, {"version", kVersion}, {"data", std::move(data)}};
    const auto tmp = path.string() + ".tmp-" + std::to_string(::getpid());
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) return;
      out << j.dump();
      if (!out) return;
    }
    std::filesystem::rename(tmp, path);
  } catch (const std::exception&) {
    // The cache is an optimization; an unwritable directory is not an error.
  }
}

}  // namespace

CharacterTable ArtifactCache::character_table(const GroupPtr& group, const std::string& spec,
                                              std::uint64_t seed) {
  if (dir_) {
    const auto path = path_for("chartable", spec);
    try {
      if (auto entry = read_entry(path, "chartable", spec)) {
        const json& d = entry->at("data");
        std::vector<std::vector<Cyclotomic>> rows;
        for (const auto& row : d.at("rows")) {
          std::vector<Cyclotomic> values;
          for (const auto& v : row) {
            RationalVector coeffs;
            for (const auto& c : v.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
            values.push_back(Cyclotomic::from_coeffs(v.at("n").get<std::uint64_t>(),
                                                     std::move(coeffs)));
          }
          rows.push_back(std::move(values));
        }
        CharacterTable t = table_from_rows(group, std::move(rows), d.at("seed").get<std::uint64_t>());
        t.prime = d.at("prime").get<std::uint64_t>();
        ++hits_;
        return t;
      }
    } catch (const std::exception&) {
      ++rejected_;
    }
  }
  CharacterTableOptions options;
  options.seed = seed;
  CharacterTable t = jacdecomp::character_table(group, options);
  if (dir_) {
    json rows = json::array();
    for (const auto& row : t.rows) {
      json values = json::array();
      for (const auto& v : row) {
        json coeffs = json::array();
        for (const auto& c : v.coeffs()) coeffs.push_back(c.get_str());
        values.push_back({{"n", v.conductor()}, {"coeffs", coeffs}});
      }
      rows.push_back(std::move(values));
    }
    write_entry(path_for("chartable", spec), "chartable", spec,
                {{"prime", t.prime}, {"seed", t.seed}, {"rows", std::move(rows)}});
  }
  return t;
}

void ArtifactCache::subgroup_lattice(const GroupPtr& group, const std::string& spec) {
  if (!dir_) return;
  const auto path = path_for("subgroups", spec);
  try {
    if (auto entry = read_entry(path, "subgroups", spec)) {
      std::vector<Subgroup> subgroups;
      for (const auto& s : entry->at("data").at("subgroups")) {
        subgroups.emplace_back(s.get<std::vector<ElementIndex>>());
      }
      group->adopt_subgroup_lattice(std::move(subgroups));
      ++hits_;
      return;
    }
  } catch (const std::exception&) {
    ++rejected_;
  }
  json subgroups = json::array();
  for (const auto& s : group->subgroup_lattice().subgroups) subgroups.push_back(s.elements());
  write_entry(path, "subgroups", spec, {{"subgroups", std::move(subgroups)}});
}

}  // namespace jacdecomp
