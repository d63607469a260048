#pragma once

// Worked examples encoded over atom universes, with their expected verdicts.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bispace/claims.hpp"

namespace bispace {

struct CatalogMap {
  SymbolicBispace target;
  AtomMap map;
  NamedSets target_sets;
};

struct CatalogEntry {
  std::string id;
  std::string title;
  // How the example was reduced to atoms, and which verdicts are hand-derived.
  std::string provenance;
  SymbolicBispace bispace;
  NamedSets sets;
  std::optional<CatalogMap> map;
  std::vector<Claim> claims;
};

class UnknownEntry : public std::invalid_argument {
 public:
  explicit UnknownEntry(const std::string& id) : std::invalid_argument("unknown catalog entry '" + id + "'") {}
};

// ex-3.1 ... ex-3.8, ex-4.1.
std::vector<std::string> catalog_ids();

// Throws UnknownEntry.
CatalogEntry build_example(std::string_view id);

// A copy of ex-3.1 with one claim inverted; verifying it must fail.
CatalogEntry negative_control_entry();

Report verify_entry(const CatalogEntry& entry, bool timings = false);

std::vector<Report> run_catalog(bool timings = false, bool include_negative_control = false);

}  // namespace bispace
