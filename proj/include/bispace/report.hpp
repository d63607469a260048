#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bispace {

struct ClaimOutcome {
  std::string entry;
  std::string claim;
  std::string predicate;
  std::string expected;  // empty when the claim carries no expectation
  std::string computed;
  std::string witness;
  bool algebra_relative = false;
  bool pass = true;
  std::optional<double> duration_ms;

  friend bool operator==(const ClaimOutcome&, const ClaimOutcome&) = default;
};

struct Report {
  std::string entry;
  std::string title;
  std::vector<ClaimOutcome> outcomes;
  std::vector<std::string> notes;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }

  friend bool operator==(const Report&, const Report&) = default;
};

enum class Format { kText, kMachine };

// Failures of every report first, then one summary line per report.
std::string emit_text(std::span<const Report> reports);

// One JSON object per line: a "claim" record per outcome followed by a
// "summary" record per report.
std::string emit_machine(std::span<const Report> reports);

std::string emit(std::span<const Report> reports, Format format);

// Inverse of emit_machine. Throws std::invalid_argument on malformed input.
std::vector<Report> parse_machine(std::string_view text);

}  // namespace bispace
