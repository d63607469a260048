#pragma once

// Property suites over enumerated finite models.
//
// Every suite reports one outcome per property: the number of instances the
// property was checked on and the first counterexample in canonical order
// (carrier size, bispace index, map index, subset). Search properties look for
// a witness instead and pass whether or not one exists, unless the witness is
// required (a pinned symbolic separation).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bispace/maps.hpp"
#include "bispace/report.hpp"

namespace bispace {

struct SuiteConfig {
  int n = 3;  // largest carrier, 1..4
  std::vector<std::string> which;
  // Map sweeps are exhaustive over carriers up to 3; with a seed they also
  // draw `samples` random instances over carriers up to n.
  std::optional<std::uint64_t> seed;
  std::uint64_t samples = 20000;
  int threads = 0;  // 0: BISPACE_LAB_THREADS, else hardware concurrency
};

// Suite names in run order.
std::vector<std::string> suite_names();
bool is_map_suite(std::string_view name);

// "all" or a comma-separated list; throws std::invalid_argument on unknown names.
std::vector<std::string> expand_suites(std::string_view which);

int worker_count(int requested);

// A strict gap of the continuity hierarchy, witnessed by a finite map.
struct StrictnessFixture {
  std::string gap;  // e.g. "precontinuous-not-continuous"
  std::optional<FiniteBispace> source;
  std::optional<FiniteBispace> target;
  std::optional<FiniteMap> map;
  std::string note;  // set when no witness exists in the swept range
};

struct SuiteRun {
  std::vector<Report> reports;
  std::vector<StrictnessFixture> fixtures;
};

// Throws std::invalid_argument on a bad config.
SuiteRun run_suites(const SuiteConfig& config);

std::string fixtures_to_json(const std::vector<StrictnessFixture>& fixtures);
std::vector<StrictnessFixture> fixtures_from_json(std::string_view text);

// Re-evaluates the gap on the stored witness; a note-only fixture holds when
// the exhaustive sweep still finds no witness.
bool fixture_holds(const StrictnessFixture& fixture);

}  // namespace bispace
