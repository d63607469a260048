#include "bispace/space_file.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bispace {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail_at(const std::string& pointer, const std::string& message) {
  throw InputError(pointer + ": " + message);
}

Json parse_json(std::string_view text, std::string_view source_name) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // byte is 1-based and points just past the offending character.
    const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    int line = 1;
    int column = 1;
    for (std::size_t k = 0; k < offset; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw InputError(std::string(source_name) + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                     what);
  }
}

const Json& member(const Json& obj, const std::string& key, const std::string& pointer) {
  if (!obj.is_object()) fail_at(pointer, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail_at(pointer, "missing member \"" + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer()) fail_at(pointer, "expected an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const std::string& pointer) {
  if (!j.is_string()) fail_at(pointer, "expected a string");
  return j.get<std::string>();
}

// Document-wide set syntax: point arrays for finite, atom id arrays for symbolic.
struct SetReader {
  int carrier = 0;
  const AtomUniverse* universe = nullptr;

  Mask read(const Json& j, const std::string& pointer) const {
    if (!j.is_array()) fail_at(pointer, "expected an array");
    Mask m = 0;
    for (std::size_t k = 0; k < j.size(); ++k) {
      const std::string at = pointer + "/" + std::to_string(k);
      if (universe) {
        const std::string id = as_string(j[k], at);
        auto idx = universe->index_of(id);
        if (!idx) fail_at(at, "unknown atom \"" + id + "\"");
        m |= Mask{1} << *idx;
      } else {
        const int p = as_int(j[k], at);
        if (p < 0 || p >= carrier) {
          fail_at(at, "point " + std::to_string(p) + " outside the carrier 0.." + std::to_string(carrier - 1));
        }
        m |= Mask{1} << p;
      }
    }
    return m;
  }
};

FiniteSpace read_finite_space(const Json& j, int n, const SetReader& reader, const std::string& pointer) {
  if (!j.is_array()) fail_at(pointer, "expected an array of open sets");
  std::vector<PointSet> family;
  for (std::size_t k = 0; k < j.size(); ++k) family.emplace_back(reader.read(j[k], pointer + "/" + std::to_string(k)));
  try {
    return FiniteSpace::validate(FiniteCarrier(n), std::move(family));
  } catch (const AxiomViolation& e) {
    fail_at(pointer, e.what());
  }
}

SchematicFamily read_family(const Json& j, const SetReader& reader, const std::string& pointer) {
  return SchematicFamily{SymSet(reader.read(member(j, "region", pointer), pointer + "/region")),
                         SymSet(reader.read(member(j, "mandatory", pointer), pointer + "/mandatory"))};
}

Claim read_claim(const Json& j, const SetReader& reader, const NamedSets& sets, const std::string& pointer) {
  Claim c;
  const std::string name = as_string(member(j, "predicate", pointer), pointer + "/predicate");
  auto p = parse_predicate(name);
  if (!p) fail_at(pointer + "/predicate", "unknown predicate \"" + name + "\"");
  if (is_map_predicate(*p)) fail_at(pointer + "/predicate", "\"" + name + "\" needs a map; space files carry none");
  c.predicate = *p;
  if (j.contains("space")) {
    c.space = as_int(j["space"], pointer + "/space");
    if (c.space != 1 && c.space != 2) fail_at(pointer + "/space", "space must be 1 or 2");
  }
  if (j.contains("pair")) {
    const Json& pair = j["pair"];
    if (!pair.is_array() || pair.size() != 2) fail_at(pointer + "/pair", "expected [i, j]");
    try {
      c.pair = IndexPair::make(as_int(pair[0], pointer + "/pair/0"), as_int(pair[1], pointer + "/pair/1"));
    } catch (const std::invalid_argument& e) {
      fail_at(pointer + "/pair", e.what());
    }
  }
  auto read_name = [&](const char* key, bool needed) {
    if (!j.contains(key)) {
      if (needed) fail_at(pointer, std::string("missing member \"") + key + "\"");
      return std::string();
    }
    const std::string at = pointer + "/" + key;
    std::string s = as_string(j[key], at);
    if (!find_set(sets, s)) fail_at(at, "unknown set \"" + s + "\"");
    return s;
  };
  c.set = read_name("set", uses_set(c.predicate));
  c.other = read_name("other", uses_other(c.predicate));
  if (j.contains("expected")) {
    const Json& e = j["expected"];
    if (set_valued(c.predicate)) {
      c.expected = reader.read(e, pointer + "/expected");
    } else {
      if (!e.is_boolean()) fail_at(pointer + "/expected", "expected a boolean");
      c.expected = e.get<bool>();
    }
  }
  if (j.contains("claim")) {
    c.label = as_string(j["claim"], pointer + "/claim");
  } else {
    c.label = (c.set.empty() ? std::string() : c.set + " ") + to_string(c.predicate);
    if (uses_space(c.predicate)) c.label += "[" + std::to_string(c.space) + "]";
    if (uses_pair(c.predicate)) c.label += to_string(c.pair);
  }
  return c;
}

std::vector<Claim> read_claims(const Json& j, const SetReader& reader, const NamedSets& sets,
                               const std::string& pointer) {
  if (!j.is_array()) fail_at(pointer, "expected an array of claims");
  std::vector<Claim> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(read_claim(j[k], reader, sets, pointer + "/" + std::to_string(k)));
  return out;
}

SetReader reader_for(const SpaceDocument& doc) {
  SetReader r;
  if (const auto* f = std::get_if<FiniteBispace>(&doc.bispace)) {
    r.carrier = f->unit_count();
  } else {
    r.universe = &std::get<SymbolicBispace>(doc.bispace).first().universe();
  }
  return r;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

SpaceDocument parse_space_document(std::string_view text, std::string_view source_name) {
  const Json root = parse_json(text, source_name);
  if (!root.is_object()) fail_at("", "expected a JSON object at the top level");
  const std::string kind = as_string(member(root, "kind", ""), "/kind");
  SetReader reader;
  std::optional<std::variant<FiniteBispace, SymbolicBispace>> bispace;

  if (kind == "finite") {
    const int n = as_int(member(root, "carrier", ""), "/carrier");
    if (n < 1 || n > kMaxAlgebraUnits) {
      fail_at("/carrier", "carrier size must be between 1 and " + std::to_string(kMaxAlgebraUnits));
    }
    reader.carrier = n;
    FiniteSpace t1 = read_finite_space(member(root, "tau1", ""), n, reader, "/tau1");
    FiniteSpace t2 = read_finite_space(member(root, "tau2", ""), n, reader, "/tau2");
    bispace.emplace(FiniteBispace(std::move(t1), std::move(t2)));
  } else if (kind == "symbolic") {
    const Json& atoms_json = member(root, "atoms", "");
    if (!atoms_json.is_array() || atoms_json.empty()) fail_at("/atoms", "expected a nonempty array of atoms");
    std::vector<Atom> atoms;
    for (std::size_t k = 0; k < atoms_json.size(); ++k) {
      const std::string at = "/atoms/" + std::to_string(k);
      const Json& a = atoms_json[k];
      const std::string tag = as_string(member(a, "cardinality", at), at + "/cardinality");
      auto card = parse_cardinality(tag);
      if (!card) fail_at(at + "/cardinality", "unknown cardinality \"" + tag + "\"");
      std::string label = a.contains("label") ? as_string(a["label"], at + "/label") : std::string();
      atoms.push_back({as_string(member(a, "id", at), at + "/id"), *card, std::move(label)});
    }
    std::shared_ptr<const AtomUniverse> universe;
    try {
      universe = std::make_shared<const AtomUniverse>(std::move(atoms));
    } catch (const std::invalid_argument& e) {
      fail_at("/atoms", e.what());
    }
    reader.universe = universe.get();
    const std::vector<SchematicFamily> families{read_family(member(root, "tau1", ""), reader, "/tau1"),
                                                read_family(member(root, "tau2", ""), reader, "/tau2")};
    for (std::size_t k = 0; k < families.size(); ++k) {
      auto diags = validate_universe_and_families(*universe, std::span(&families[k], 1));
      if (!diags.empty()) fail_at("/tau" + std::to_string(k + 1), diags.front().message);
    }
    bispace.emplace(SymbolicBispace(SchematicSpace(universe, families[0]), SchematicSpace(universe, families[1])));
  } else {
    fail_at("/kind", "kind must be \"finite\" or \"symbolic\", not \"" + kind + "\"");
  }

  SpaceDocument doc{std::move(*bispace), {}, {}};
  if (root.contains("sets")) {
    const Json& sets = root["sets"];
    if (!sets.is_object()) fail_at("/sets", "expected an object of named sets");
    for (const auto& [name, value] : sets.items()) {
      if (find_set(doc.sets, name)) fail_at("/sets/" + name, "duplicate set name");
      doc.sets.push_back({name, reader.read(value, "/sets/" + name)});
    }
  }
  const Mask whole = std::visit([](const auto& x) { return x.full().bits(); }, doc.bispace);
  if (!find_set(doc.sets, "X")) doc.sets.push_back({"X", whole});
  if (!find_set(doc.sets, "empty")) doc.sets.push_back({"empty", 0});
  if (root.contains("claims")) doc.claims = read_claims(root["claims"], reader, doc.sets, "/claims");
  return doc;
}

std::vector<Claim> parse_claims_document(std::string_view text, const SpaceDocument& doc,
                                         std::string_view source_name) {
  const Json root = parse_json(text, source_name);
  const SetReader reader = reader_for(doc);
  if (root.is_object()) return read_claims(member(root, "claims", ""), reader, doc.sets, "/claims");
  return read_claims(root, reader, doc.sets, "");
}

Report check_document(const SpaceDocument& doc, std::string entry, bool timings) {
  Report r;
  r.entry = std::move(entry);
  r.title = std::visit(
      [](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, FiniteBispace>) {
          return "finite bispace on " + std::to_string(x.unit_count()) + " point(s)";
        } else {
          return "symbolic bispace over " + std::to_string(x.unit_count()) + " atom(s)";
        }
      },
      doc.bispace);
  std::vector<Claim> claims = doc.claims;
  if (claims.empty()) {
    claims = default_battery(doc.sets);
    r.notes.push_back("no claims given: default battery over every named set");
  }
  for (const auto& c : claims) {
    const auto start = std::chrono::steady_clock::now();
    ClaimOutcome o = std::visit([&](const auto& x) { return evaluate_claim(x, doc.sets, c); }, doc.bispace);
    if (timings) {
      o.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    o.entry = r.entry;
    r.outcomes.push_back(std::move(o));
  }
  return r;
}

Report check_user_file(const std::filesystem::path& path, const std::optional<std::filesystem::path>& claims,
                       bool timings) {
  SpaceDocument doc = parse_space_document(read_file(path), path.filename().string());
  if (claims) doc.claims = parse_claims_document(read_file(*claims), doc, claims->filename().string());
  return check_document(doc, path.filename().string(), timings);
}

}  // namespace bispace
