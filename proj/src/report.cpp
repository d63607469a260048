#include "bispace/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bispace {

using Json = nlohmann::ordered_json;

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return !o.pass; }));
}

namespace {

std::string describe_failure(const ClaimOutcome& o) {
  std::string out = "  [" + o.entry + "] " + o.claim + ": " + o.predicate + " expected " + o.expected +
                    ", computed " + o.computed;
  if (!o.witness.empty()) out += " (witness " + o.witness + ")";
  if (o.algebra_relative) out += " [algebra-relative]";
  return out + "\n";
}

}  // namespace

std::string emit_text(std::span<const Report> reports) {
  std::string out;
  std::size_t failed = 0;
  for (const auto& r : reports) failed += r.failures();
  if (failed > 0) {
    out += "FAILURES\n";
    for (const auto& r : reports) {
      for (const auto& o : r.outcomes) {
        if (!o.pass) out += describe_failure(o);
      }
    }
    out += "\n";
  }
  for (const auto& r : reports) {
    const std::size_t total = r.outcomes.size();
    out += (r.passed() ? "pass  " : "FAIL  ") + r.entry + "  " + std::to_string(total - r.failures()) + "/" +
           std::to_string(total);
    if (!r.title.empty()) out += "  " + r.title;
    out += "\n";
    for (const auto& o : r.outcomes) {
      if (!o.pass) continue;
      out += "      " + o.claim + ": " + o.computed;
      if (!o.witness.empty()) out += "  witness " + o.witness;
      if (o.algebra_relative) out += "  [algebra-relative]";
      if (o.duration_ms) {
        std::ostringstream ms;
        ms.precision(3);
        ms << std::fixed << *o.duration_ms;
        out += "  " + ms.str() + " ms";
      }
      out += "\n";
    }
    for (const auto& n : r.notes) out += "      note: " + n + "\n";
  }
  out += std::to_string(reports.size()) + " report(s), " + std::to_string(failed) + " failing claim(s)\n";
  return out;
}

std::string emit_machine(std::span<const Report> reports) {
  std::string out;
  for (const auto& r : reports) {
    for (const auto& o : r.outcomes) {
      Json j;
      j["record"] = "claim";
      j["entry"] = o.entry;
      j["claim"] = o.claim;
      j["predicate"] = o.predicate;
      j["expected"] = o.expected;
      j["computed"] = o.computed;
      j["witness"] = o.witness;
      j["algebra_relative"] = o.algebra_relative;
      j["pass"] = o.pass;
      j["duration_ms"] = o.duration_ms ? Json(*o.duration_ms) : Json(nullptr);
      out += j.dump() + "\n";
    }
    Json s;
    s["record"] = "summary";
    s["entry"] = r.entry;
    s["title"] = r.title;
    s["claims"] = r.outcomes.size();
    s["failed"] = r.failures();
    s["status"] = r.passed() ? "pass" : "fail";
    s["notes"] = r.notes;
    out += s.dump() + "\n";
  }
  return out;
}

std::string emit(std::span<const Report> reports, Format format) {
  return format == Format::kMachine ? emit_machine(reports) : emit_text(reports);
}

std::vector<Report> parse_machine(std::string_view text) {
  std::vector<Report> out;
  Report current;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto where = "line " + std::to_string(line_no) + ": ";
    Json j;
    try {
      j = Json::parse(line);
      const std::string record = j.at("record").get<std::string>();
      if (record == "claim") {
        ClaimOutcome o;
        o.entry = j.at("entry").get<std::string>();
        o.claim = j.at("claim").get<std::string>();
        o.predicate = j.at("predicate").get<std::string>();
        o.expected = j.at("expected").get<std::string>();
        o.computed = j.at("computed").get<std::string>();
        o.witness = j.at("witness").get<std::string>();
        o.algebra_relative = j.at("algebra_relative").get<bool>();
        o.pass = j.at("pass").get<bool>();
        if (!j.at("duration_ms").is_null()) o.duration_ms = j.at("duration_ms").get<double>();
        current.outcomes.push_back(std::move(o));
      } else if (record == "summary") {
        current.entry = j.at("entry").get<std::string>();
        current.title = j.at("title").get<std::string>();
        current.notes = j.at("notes").get<std::vector<std::string>>();
        if (j.at("claims").get<std::size_t>() != current.outcomes.size() ||
            j.at("failed").get<std::size_t>() != current.failures()) {
          throw std::invalid_argument("summary counts do not match the claim records");
        }
        out.push_back(std::move(current));
        current = Report{};
      } else {
        throw std::invalid_argument("unknown record kind '" + record + "'");
      }
    } catch (const Json::exception& e) {
      throw std::invalid_argument(where + e.what());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + e.what());
    }
  }
  if (!current.outcomes.empty()) throw std::invalid_argument("claim records without a closing summary");
  return out;
}

}  // namespace bispace
