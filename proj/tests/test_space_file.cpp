#include "doctest.h"

#include "bispace/catalog.hpp"
#include "bispace/space_file.hpp"

using namespace bispace;

namespace {

const std::filesystem::path kData = BISPACE_TEST_DATA;

std::string input_error(std::string_view text) {
  try {
    parse_space_document(text, "t.json");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("a re-encoded catalog example reproduces the catalog verdicts") {
  const Report file = check_user_file(kData / "split_irrationals.json", std::nullopt);
  const Report catalog = verify_entry(build_example("ex-3.2"));
  CHECK(file.entry == "split_irrationals.json");
  CHECK(file.passed());
  REQUIRE(file.outcomes.size() == catalog.outcomes.size());
  for (std::size_t k = 0; k < file.outcomes.size(); ++k) {
    CAPTURE(catalog.outcomes[k].claim);
    CHECK(file.outcomes[k].computed == catalog.outcomes[k].computed);
    CHECK(file.outcomes[k].expected == catalog.outcomes[k].expected);
  }
}

TEST_CASE("without claims the default battery runs on every named set") {
  const Report r = check_user_file(kData / "sierpinski_pair.json", std::nullopt);
  const SpaceDocument doc = parse_space_document(
      R"({"kind":"finite","carrier":3,"tau1":[[],[0],[0,1,2]],"tau2":[[],[1],[0,1],[0,1,2]],"sets":{"A":[0],"B":[1,2]}})");
  CHECK(r.outcomes.size() == default_battery(doc.sets).size());
  CHECK(r.passed());
  REQUIRE_FALSE(r.notes.empty());
  // X and the empty set are always available.
  CHECK(find_set(doc.sets, "X") == Mask{7});
  CHECK(find_set(doc.sets, "empty") == Mask{0});
}

TEST_CASE("claims may come from a separate file") {
  const SpaceDocument doc = parse_space_document(
      R"({"kind":"finite","carrier":2,"tau1":[[],[0],[0,1]],"tau2":[[],[0,1]],"sets":{"A":[1]}})");
  const auto as_array = parse_claims_document(R"([{"predicate":"closure","space":1,"set":"A","expected":[1]}])", doc);
  const auto as_object =
      parse_claims_document(R"({"claims":[{"predicate":"open","space":1,"set":"A","expected":false}]})", doc);
  REQUIRE(as_array.size() == 1);
  REQUIRE(as_object.size() == 1);
  SpaceDocument with = doc;
  with.claims = as_array;
  CHECK(check_document(with, "inline").passed());
  with.claims = as_object;
  CHECK(check_document(with, "inline").passed());
  with.claims = parse_claims_document(R"([{"predicate":"open","space":1,"set":"A","expected":true}])", doc);
  CHECK_FALSE(check_document(with, "inline").passed());
}

TEST_CASE("malformed families are rejected with a pointer to the offending member") {
  const std::string e = input_error(R"({"kind":"finite","carrier":3,"tau1":[[],[0],[1],[0,1,2]],"tau2":[[],[0,1,2]]})");
  CHECK(e.find("/tau1") != std::string::npos);
  CHECK(e.find("{0, 1}") != std::string::npos);

  const std::string sym = input_error(
      R"({"kind":"symbolic","atoms":[{"id":"a","cardinality":"uncountable"}],)"
      R"("tau1":{"region":["a"],"mandatory":["a"]},"tau2":{"region":[],"mandatory":[]}})");
  CHECK(sym.find("/tau1") != std::string::npos);
}

TEST_CASE("syntax errors carry line and column") {
  const std::string e = input_error("{\n  \"kind\": \"finite\",\n  \"carrier\": 2,\n}");
  CHECK(e.find("t.json:4:") != std::string::npos);
  CHECK(e.find("syntax error") != std::string::npos);
}

TEST_CASE("semantic errors in claims and sets") {
  const std::string base = R"({"kind":"finite","carrier":2,"tau1":[[],[0,1]],"tau2":[[],[0,1]],)";
  CHECK(input_error(base + R"("claims":[{"predicate":"nonsense","set":"X"}]})").find("/claims/0/predicate") !=
        std::string::npos);
  CHECK(input_error(base + R"("claims":[{"predicate":"pairwise_continuous"}]})").find("needs a map") !=
        std::string::npos);
  CHECK(input_error(base + R"("claims":[{"predicate":"open","set":"Q"}]})").find("/claims/0") != std::string::npos);
  CHECK(input_error(base + R"("sets":{"A":[5]}})").find("/sets/A") != std::string::npos);
  CHECK_FALSE(input_error(R"({"kind":"weird"})").empty());
  CHECK_FALSE(input_error(R"({"kind":"symbolic","atoms":[{"id":"a","cardinality":"huge"}],)"
                          R"("tau1":{"region":[],"mandatory":[]},"tau2":{"region":[],"mandatory":[]}})")
                  .empty());
}

TEST_CASE("missing files are input errors") {
  CHECK_THROWS_AS(check_user_file(kData / "no_such_file.json", std::nullopt), InputError);
}
