#pragma once

// User-supplied bispaces.
//
// A space file is a JSON document:
//
//   document  = "{" kind "," structure [ "," sets ] [ "," claims ] "}"
//   kind      = "\"kind\":" ( "\"finite\"" | "\"symbolic\"" )
//   structure = finite: "\"carrier\":" int "," "\"tau1\":" opens "," "\"tau2\":" opens
//               symbolic: "\"atoms\":" "[" atom { "," atom } "]" ","
//                         "\"tau1\":" family "," "\"tau2\":" family
//   opens     = "[" points { "," points } "]"      points = "[" int { "," int } "]"
//   atom      = "{" "\"id\":" string "," "\"cardinality\":" ( "\"singleton\"" | "\"countable\"" | "\"uncountable\"" )
//               [ "," "\"label\":" string ] "}"
//   family    = "{" "\"region\":" ids "," "\"mandatory\":" ids "}"
//   sets      = "\"sets\":" "{" name ":" ( points | ids ) { "," ... } "}"
//   claims    = "\"claims\":" "[" claim { "," claim } "]"
//   claim     = "{" "\"predicate\":" string [ "\"claim\":" string ] [ "\"space\":" 1|2 ] [ "\"pair\":" "[" i "," j "]" ]
//               [ "\"set\":" name ] [ "\"other\":" name ] [ "\"expected\":" ( bool | points | ids ) ] "}"
//
// A separate claims file holds either a claims array or an object with a
// "claims" member. Without claims, every predicate runs on every named set.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bispace/claims.hpp"

namespace bispace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpaceDocument {
  std::variant<FiniteBispace, SymbolicBispace> bispace;
  NamedSets sets;
  std::vector<Claim> claims;
};

// Throws InputError: syntax errors carry "name:line:column", semantic errors
// a JSON pointer to the offending member.
SpaceDocument parse_space_document(std::string_view text, std::string_view source_name = "<input>");
std::vector<Claim> parse_claims_document(std::string_view text, const SpaceDocument& doc,
                                         std::string_view source_name = "<claims>");

// Evaluates the document's claims, or the default battery when it has none.
Report check_document(const SpaceDocument& doc, std::string entry, bool timings = false);

Report check_user_file(const std::filesystem::path& path, const std::optional<std::filesystem::path>& claims,
                       bool timings = false);

}  // namespace bispace
