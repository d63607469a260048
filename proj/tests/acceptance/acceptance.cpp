// Acceptance gate: one line per criterion, nonzero exit if any line fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "bispace/catalog.hpp"
#include "bispace/suites.hpp"
#include "support/oracles.hpp"

using namespace bispace;

namespace {

// Wall-clock budgets in seconds.
constexpr double kCatalogBudget = 1.0;
constexpr double kClosureBudget = 10.0;
constexpr double kEquivalenceBudget = 30.0;
constexpr double kTheoremBudget = 60.0;
constexpr double kMapBudget = 300.0;
constexpr int kUniverses = 60;

struct Verdict {
  bool ok = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict timed_suites(int n, std::string_view which, double budget) {
  SuiteConfig c;
  c.n = n;
  c.which = expand_suites(which);
  const auto start = Clock::now();
  const SuiteRun run = run_suites(c);
  const double took = seconds_since(start);
  int failures = 0;
  for (const auto& r : run.reports) failures += r.failures();
  std::ostringstream d;
  d << run.reports.size() << " suites, " << failures << " failing claims, " << fmt_seconds(took) << " (budget "
    << budget << " s)";
  return {failures == 0 && took < budget, d.str()};
}

Verdict catalog() {
  const auto start = Clock::now();
  const auto reports = run_catalog();
  const double took = seconds_since(start);
  int passed = 0;
  for (const auto& r : reports) passed += r.passed() ? 1 : 0;
  std::ostringstream d;
  d << passed << "/" << reports.size() << " entries pass, " << fmt_seconds(took) << " (budget " << kCatalogBudget
    << " s)";
  return {reports.size() == 9 && passed == 9 && took < kCatalogBudget, d.str()};
}

// Schematic predicates against the materialized finite bispace and the
// definitional oracle, on universes made only of singleton atoms.
Verdict equivalence() {
  const auto start = Clock::now();
  std::mt19937_64 rng(7301);
  long checks = 0;
  long mismatches = 0;
  auto agree = [&](bool same) {
    ++checks;
    mismatches += same ? 0 : 1;
  };
  for (int round = 0; round < kUniverses; ++round) {
    const int n = 1 + static_cast<int>(rng() % 4);
    auto u = oracle::singleton_universe(n);
    auto [r1, p1] = oracle::random_family(rng, n);
    auto [r2, p2] = oracle::random_family(rng, n);
    const auto fam1 = oracle::materialize(n, r1, p1);
    const auto fam2 = oracle::materialize(n, r2, p2);
    const SymbolicBispace sym(SchematicSpace(u, {SymSet(oracle::to_mask(r1)), SymSet(oracle::to_mask(p1))}),
                              SchematicSpace(u, {SymSet(oracle::to_mask(r2)), SymSet(oracle::to_mask(p2))}));
    const FiniteBispace fin(oracle::to_space(fam1, n), oracle::to_space(fam2, n));
    const std::array<const oracle::Family*, 2> fams = {&fam1, &fam2};
    for (IndexPair ij : kBothPairs) {
      const auto& ti = *fams[ij.i() - 1];
      const auto& tj = *fams[ij.j() - 1];
      for (Mask m = 0; m < (Mask{1} << n); ++m) {
        const SymSet s(m);
        const PointSet f(m);
        const auto pts = oracle::to_points(m);
        agree(is_ij_preopen(sym, ij, s) == is_ij_preopen(fin, ij, f));
        agree(is_ij_preopen(fin, ij, f) == oracle::preopen(ti, tj, n, pts));
        agree(is_ij_weakly_preopen(sym, ij, s) == oracle::weakly_preopen(ti, tj, n, pts));
        agree(is_ij_semiopen(sym, ij, s) == oracle::semiopen(ti, tj, n, pts));
        agree(is_ij_semipreopen(sym, ij, s) == oracle::semipreopen(ti, tj, n, pts));
        agree(pcl(sym, ij, s).bits() == pcl(fin, ij, f).bits());
        agree(spcl(sym, ij, s).bits() == spcl(fin, ij, f).bits());
      }
    }
  }
  const double took = seconds_since(start);
  std::ostringstream d;
  d << kUniverses << " seeded universes, " << checks << " comparisons, " << mismatches << " mismatches, "
    << fmt_seconds(took) << " (budget " << kEquivalenceBudget << " s)";
  return {mismatches == 0 && took < kEquivalenceBudget, d.str()};
}

Verdict strictness(const std::filesystem::path& frozen_path) {
  SuiteConfig c;
  c.n = 3;
  c.which = {"remark-5.1"};
  const SuiteRun run = run_suites(c);
  const std::string fresh = fixtures_to_json(run.fixtures);
  const std::string frozen = read_file(frozen_path);
  const auto fixtures = fixtures_from_json(frozen);
  int holding = 0;
  bool required = true;
  for (const auto& f : fixtures) {
    holding += fixture_holds(f) ? 1 : 0;
    if (f.gap == "precontinuous-not-continuous" || f.gap == "sp-continuous-not-semi-continuous") {
      required = required && (f.map.has_value() || !f.note.empty());
    }
  }
  std::ostringstream d;
  d << fixtures.size() << " frozen fixtures, " << holding << " still hold, fresh run "
    << (fresh == frozen ? "matches" : "differs from") << " the frozen file";
  return {!fixtures.empty() && holding == static_cast<int>(fixtures.size()) && required && fresh == frozen, d.str()};
}

std::pair<int, std::string> run_cli(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, out};
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  return {pclose(pipe), out};
}

Verdict determinism(const std::string& cli) {
  const std::string command = "\"" + cli + "\" --format machine suite --n 3 --which all";
  const auto [status_a, first] = run_cli(command);
  const auto [status_b, second] = run_cli(command);
  std::ostringstream d;
  d << "two CLI runs, " << first.size() << " and " << second.size() << " bytes, "
    << (first == second ? "identical" : "different");
  return {status_a == 0 && status_b == 0 && !first.empty() && first == second, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : BISPACE_LAB_CLI;
  const std::filesystem::path fixtures = argc > 2 ? argv[2] : BISPACE_TEST_FIXTURES "/strictness.json";

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"catalog", catalog},
      {"closure laws", [] { return timed_suites(3, "closure-laws", kClosureBudget); }},
      {"finite/symbolic equivalence", equivalence},
      {"theorem suites",
       [] {
         return timed_suites(
             3, "lemma-3.1,preopen-hierarchy,C1-iff-C2,thm-3.1,thm-3.2,thm-3.3,thm-3.4,thm-3.5,thm-3.6,thm-3.7",
             kTheoremBudget);
       }},
      {"map suites",
       [] {
         return timed_suites(3, "remark-5.1,note-4.1,thm-4.1,thm-4.2,thm-4.3,thm-4.4,thm-4.5,thm-4.6,thm-5.1,thm-5.2,thm-5.3",
                             kMapBudget);
       }},
      {"strictness fixtures", [&] { return strictness(fixtures); }},
      {"determinism", [&] { return determinism(cli); }},
  };

  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += v.ok ? 0 : 1;
    std::cout << (v.ok ? "PASS" : "FAIL") << "  " << index << ". " << name << ": " << v.detail << "\n";
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
