// Textual field specifications: a small grammar naming every catalog member
// and combinator, so the command line (and reports) can describe a field as
// a single string.
//
//   spec   := name | name '(' args ')' suffix? | 'expr:' expression
//   args   := arg (',' arg)*
//   arg    := key '=' value | value
//   value  := number | '[' number (',' number)* ']' | spec
//   suffix := '-re' | '-im' | '-arg'        (holomorphic bases only)
//
// Case and '-' vs '_' are not significant outside expression payloads.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minsurf/field.hpp"
#include "minsurf/holo.hpp"

namespace minsurf {

// Exactly one member is set after a successful resolve.
struct ResolvedField {
  std::optional<ScalarField> scalar;
  std::optional<HoloField> holo;
  std::optional<std::pair<ScalarField, ScalarField>> twins;
};

// Lowercases and maps '_' to '-'; the canonical display form of a spec.
std::string normalize_spec(std::string_view spec);

// Parses and instantiates a spec. expr_dim widens the ambient dimension of
// "expr:" payloads (-1 keeps the smallest dimension the expression allows).
// Throws ParseError for malformed text and std::invalid_argument for
// well-formed specs with impossible arguments.
ResolvedField resolve_spec(std::string_view spec, int expr_dim = -1);

// Same, but require the given shape.
ScalarField resolve_scalar(std::string_view spec, int expr_dim = -1);
HoloField resolve_holo(std::string_view spec);
std::pair<ScalarField, ScalarField> resolve_twins(std::string_view spec,
                                                  int expr_dim = -1);

struct CatalogEntry {
  std::string spec;
  int dim;  // ambient real dimension
  std::string summary;
};

std::vector<CatalogEntry> catalog_entries();

// One line per entry: "spec  N=dim  summary".
std::string catalog_listing();

}  // namespace minsurf
