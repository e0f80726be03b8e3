#include <iostream>

#include <CLI11.hpp>

#include "jacdecomp/cli.hpp"

int main(int argc, char** argv) {
  using namespace jacdecomp;
  CLI::App app{"Isogeny decomposition of Jacobians with group action"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1, 1);

  RunConfig config;
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;

  const std::vector<std::pair<std::string, std::string>> descriptions = {
      {"chartable", "complex character table and rational characters"},
      {"idempotents", "central and primitive idempotents of Q[G]"},
      {"subgroups", "subgroups up to conjugacy"},
      {"pryms", "exponent vector of P(X_M/X_N)"},
      {"decompose", "isogeny decomposition of JX with Prym identifications"},
      {"lattice-check", "integral lattice certificates"},
  };
  for (const auto& [verb, text] : descriptions) {
    CLI::App* sub = app.add_subcommand(verb, text);
    sub->add_option("--group,-g", config.group_spec,
                    "group: S:n, A:n, D:n, Z:n, Q8 or perm:<deg>:<g1>;<g2>")
        ->required();
    sub->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", config.seed, "seed for randomized steps");
    sub->add_option("--cache-dir", cache_dir, "cache directory");
    sub->add_flag("--no-cache", no_cache, "disable the on-disk cache");
    sub->add_option("--order-bound", config.order_bound, "largest admissible group order");
    if (verb == "pryms") {
      sub->add_option("--sub", config.sub, "subgroup M")->required();
      sub->add_option("--super", config.super, "subgroup N containing M")->required();
    }
    if (verb == "lattice-check") {
      sub->add_option("--perm-subgroup", config.perm_subgroup,
                      "use the permutation lattice on the cosets of this subgroup");
    }
    sub->callback([&config, verb = verb] { config.verb = verb; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  config.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  config.use_cache = !no_cache;
  if (!cache_dir.empty()) config.cache_dir = cache_dir;

  const RunResult result = run(config);
  std::cout << result.output;
  if (!result.error.empty()) std::cerr << result.error << "\n";
  return result.exit_code;
}
