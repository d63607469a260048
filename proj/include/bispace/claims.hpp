#pragma once

// Claims about named sets of a bispace (and optionally a map out of it),
// evaluated into report outcomes.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bispace/maps.hpp"
#include "bispace/report.hpp"

namespace bispace {

enum class Predicate {
  kOpen,
  kClosure,
  kInterior,
  kOpenBetween,
  kPreopen,
  kWeaklyPreopen,
  kIjPreopen,
  kIjWeaklyPreopen,
  kPairwisePreopen,
  kIjSemiopen,
  kIjSemipreopen,
  kSemipreopenVia,
  kIjPreclosed,
  kIjSemipreclosed,
  kPcl,
  kSpcl,
  kClosedSupersetInterior,
  kPreimage,
  kImage,
  kPairwiseContinuous,
  kPairwiseOpenMap,
  kPairwisePrecontinuous,
  kPairwiseSemiContinuous,
  kPairwiseSpContinuous,
  kClosurePreserved,
  kClosurePreservedAll,
  kConditionC,
};

const char* to_string(Predicate p);
std::optional<Predicate> parse_predicate(std::string_view name);
std::vector<Predicate> all_predicates();

// Which operands a predicate reads.
bool uses_space(Predicate p);
bool uses_pair(Predicate p);
bool uses_set(Predicate p);
bool uses_other(Predicate p);
bool set_valued(Predicate p);
bool is_map_predicate(Predicate p);

using Expected = std::variant<bool, Mask>;

struct Claim {
  std::string label;
  Predicate predicate = Predicate::kOpen;
  int space = 1;
  IndexPair pair = kOneTwo;
  std::string set;    // source set, or target set for preimage
  std::string other;  // upper bound for open_between, witness for semipreopen_via
  std::optional<Expected> expected;
};

struct NamedSet {
  std::string name;
  Mask bits = 0;
};

using NamedSets = std::vector<NamedSet>;

std::optional<Mask> find_set(const NamedSets& sets, std::string_view name);

struct SymbolicMapContext {
  const SymbolicBispace& target;
  const AtomMap& map;
  const NamedSets& target_sets;
};

// Throws std::invalid_argument for unknown set names or a map predicate
// without a map.
ClaimOutcome evaluate_claim(const FiniteBispace& x, const NamedSets& sets, const Claim& claim);
ClaimOutcome evaluate_claim(const SymbolicBispace& x, const NamedSets& sets, const Claim& claim,
                            const SymbolicMapContext* map = nullptr);

// Every bispace predicate on every named set, without expectations.
std::vector<Claim> default_battery(const NamedSets& sets);

}  // namespace bispace
