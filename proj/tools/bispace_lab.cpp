// Command-line front end. Exit status: 0 when everything passes, 1 on a
// claim or suite violation, 2 on bad input.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "bispace/catalog.hpp"
#include "bispace/space_file.hpp"
#include "bispace/suites.hpp"
#include "json.hpp"

namespace {

using namespace bispace;

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

int finish(const std::vector<Report>& reports, Format format) {
  std::cout << emit(reports, format);
  for (const auto& r : reports) {
    if (!r.passed()) return kViolation;
  }
  return kPass;
}

int enumerate(int n, Format format) {
  const auto spaces = enumerate_spaces(n);
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    if (format == Format::kMachine) {
      nlohmann::ordered_json j{{"record", "space"}, {"n", n}, {"index", k}};
      nlohmann::ordered_json opens = nlohmann::ordered_json::array();
      for (PointSet u : spaces[k].opens()) opens.push_back(u.elements());
      j["opens"] = std::move(opens);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << k << "  " << spaces[k].describe() << "\n";
    }
  }
  if (format == Format::kText) std::cout << spaces.size() << " spaces on " << n << " points\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification engine for preopen sets in bispaces"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  bool timings = false;
  bool negative_control = false;
  app.add_option("--format", format_name, "Report format")->check(CLI::IsMember({"text", "machine"}));
  app.add_flag("--timings", timings, "Record per-claim durations");
  app.add_flag("--negative-control", negative_control)->group("");

  auto* catalog_cmd = app.add_subcommand("verify-catalog", "Verify the built-in worked examples");
  std::string entry_id;
  catalog_cmd->add_option("--entry", entry_id, "Verify a single entry");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every topology on a small carrier");
  int enum_n = 0;
  enumerate_cmd->add_option("--n", enum_n, "Carrier size (1-4)")->required();

  auto* suite_cmd = app.add_subcommand("suite", "Run property suites over enumerated models");
  SuiteConfig config;
  std::string which;
  std::uint64_t seed = 0;
  std::string fixtures_path;
  suite_cmd->add_option("--n", config.n, "Largest carrier size (1-4)")->required();
  suite_cmd->add_option("--which", which, "Suite name, comma-separated list, or all")->required();
  auto* seed_opt = suite_cmd->add_option("--seed", seed, "Also sample random map instances with this seed");
  suite_cmd->add_option("--samples", config.samples, "Number of sampled map instances")->needs(seed_opt);
  suite_cmd->add_option("--threads", config.threads, "Worker threads (default: BISPACE_LAB_THREADS or all cores)");
  suite_cmd->add_option("--fixtures", fixtures_path, "Write strictness witnesses to this file");

  auto* check_cmd = app.add_subcommand("check", "Check claims about a bispace described in a file");
  std::string space_path;
  std::string claims_path;
  check_cmd->add_option("file", space_path, "Space file")->required();
  check_cmd->add_option("--claims", claims_path, "Separate claims file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  const Format format = format_name == "machine" ? Format::kMachine : Format::kText;
  try {
    if (*catalog_cmd) {
      if (!entry_id.empty()) return finish({verify_entry(build_example(entry_id), timings)}, format);
      return finish(run_catalog(timings, negative_control), format);
    }
    if (*enumerate_cmd) return enumerate(enum_n, format);
    if (*suite_cmd) {
      config.which = expand_suites(which);
      if (seed_opt->count() > 0) config.seed = seed;
      const SuiteRun run = run_suites(config);
      if (!fixtures_path.empty()) {
        std::ofstream out(fixtures_path);
        if (!out) throw InputError("cannot write " + fixtures_path);
        out << fixtures_to_json(run.fixtures);
      }
      return finish(run.reports, format);
    }
    if (*check_cmd) {
      std::optional<std::filesystem::path> claims;
      if (!claims_path.empty()) claims = claims_path;
      return finish({check_user_file(space_path, claims, timings)}, format);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kPass;
}
