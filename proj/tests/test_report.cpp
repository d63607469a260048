#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "bispace/report.hpp"

using namespace bispace;

namespace {

std::vector<Report> sample_reports() {
  Report good;
  good.entry = "alpha";
  good.title = "first report";
  good.outcomes.push_back({"alpha", "a open", "open", "true", "true", "", false, true, std::nullopt});
  good.outcomes.push_back({"alpha", "a pcl", "pcl", "{0}", "{0}", "{0}", true, true, 1.5});
  good.notes = {"a note"};

  Report bad;
  bad.entry = "beta";
  bad.title = "second report";
  bad.outcomes.push_back({"beta", "b preopen", "preopen", "false", "true", "{0, 1}", false, false, std::nullopt});
  return {good, bad};
}

}  // namespace

TEST_CASE("machine format round-trips through the parser") {
  const auto reports = sample_reports();
  const std::string text = emit_machine(reports);
  CHECK(parse_machine(text) == reports);
  // One line per claim plus one summary per report.
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
}

TEST_CASE("machine format uses the stable field names") {
  const std::string text = emit_machine(sample_reports());
  for (const char* field : {"\"entry\"", "\"claim\"", "\"predicate\"", "\"expected\"", "\"computed\"", "\"witness\"",
                            "\"algebra_relative\"", "\"duration_ms\""}) {
    CHECK(text.find(field) != std::string::npos);
  }
  CHECK(text.find("\"duration_ms\":null") != std::string::npos);
}

TEST_CASE("text format lists failures before the per-report lines") {
  const std::string text = emit_text(sample_reports());
  const auto failures = text.find("FAILURES");
  const auto first_summary = text.find("pass  alpha");
  REQUIRE(failures != std::string::npos);
  REQUIRE(first_summary != std::string::npos);
  CHECK(failures < first_summary);
  CHECK(text.find("FAIL  beta") != std::string::npos);
}

TEST_CASE("report pass state") {
  const auto reports = sample_reports();
  CHECK(reports[0].passed());
  CHECK(reports[1].failures() == 1);
  CHECK(emit(reports, Format::kMachine) == emit_machine(reports));
  CHECK(emit(reports, Format::kText) == emit_text(reports));
}

TEST_CASE("malformed machine input is rejected with its line number") {
  CHECK_THROWS_WITH_AS(parse_machine("{\"record\":\"claim\"\n"), doctest::Contains("line 1"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_machine("not json\n"), doctest::Contains("line 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_machine("{\"record\":\"other\"}\n"), std::invalid_argument);

  // A summary whose counts disagree with its claim records.
  std::string text = emit_machine(std::vector<Report>{sample_reports()[0]});
  const auto pos = text.find("\"claims\":2");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 10, "\"claims\":3");
  CHECK_THROWS_AS(parse_machine(text), std::invalid_argument);
}
