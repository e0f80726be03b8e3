#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "jacdecomp/chartab.hpp"
#include "jacdecomp/perm.hpp"

namespace jacdecomp {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::string verb;  // chartable, idempotents, subgroups, pryms, decompose, lattice-check
  std::string group_spec;
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::filesystem::path> cache_dir;  // empty: environment or default location
  bool use_cache = true;
  std::size_t order_bound = kDefaultOrderBound;
  std::string sub;             // pryms: M
  std::string super;           // pryms: N
  std::string perm_subgroup;   // lattice-check: permutation lattice on cosets of this subgroup
};

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitBound = 3 };

struct RunResult {
  int exit_code = kExitOk;
  std::string output;  // report for standard output
  std::string error;   // diagnostic for standard error
};

const std::vector<std::string>& verbs();

/// Dispatches the verb; never throws. Exit code 2 for usage errors, 1 for failed invariants,
/// 3 for exceeded resource bounds.
RunResult run(const RunConfig& config);

/// JACDECOMP_CACHE_DIR if set, else $HOME/.cache/jacdecomp.
std::filesystem::path default_cache_dir();

/// On-disk cache of character tables and subgroup lists, keyed by group spec and code version.
/// Entries are re-validated on load and written atomically.
class ArtifactCache {
 public:
  explicit ArtifactCache(std::optional<std::filesystem::path> dir);

  bool enabled() const { return dir_.has_value(); }
  std::filesystem::path path_for(const std::string& kind, const std::string& spec) const;

  /// Cached table if present and valid; computes and stores it otherwise.
  CharacterTable character_table(const GroupPtr& group, const std::string& spec,
                                 std::uint64_t seed);
  /// Installs a cached subgroup list into the group if present and valid; stores it otherwise.
  void subgroup_lattice(const GroupPtr& group, const std::string& spec);

  /// Number of entries reused / rejected during this object's lifetime.
  std::size_t hits() const { return hits_; }
  std::size_t rejected() const { return rejected_; }

 private:
  std::optional<std::filesystem::path> dir_;
  std::size_t hits_ = 0;
  std::size_t rejected_ = 0;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& data);

}  // namespace jacdecomp
