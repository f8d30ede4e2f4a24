#pragma once

#include <nlohmann/json.hpp>

#include "weightsum/charsum.hpp"
#include "weightsum/constructions.hpp"

namespace weightsum {

using Json = nlohmann::ordered_json;

// Field specs: {"kind":"rational"|"cyclotomic"|"prime"|"prime_ext", ...}
FieldSpec field_spec_from_json(const Json& j);
Json field_spec_to_json(const FieldSpec& spec);

// Elements: integers, "a/b" strings, "zeta"/"zeta^k" (optionally negated),
// or {"poly": [c0, c1, ...]} in powers of zeta resp. t.
FieldElement element_from_json(const FieldPtr& field, const Json& j);
Json element_to_json(const FieldElement& e);

// Words and monomials as compact strings: "K^2*h*h", "1" for the empty word.
GroupWord parse_word(const std::string& text);
Monomial parse_monomial(const std::string& text);

HopfPresentation presentation_from_json(const Json& j);
Json presentation_to_json(const HopfPresentation& p);

// Named builders: {"name":"uql","rank":2,"l":4}, {"name":"hn","n":3}, ...
PresentationPtr builder_from_json(const Json& j);

Json character_to_json(const Character& chi);
Character character_from_json(const PresentationPtr& pres, const FieldPtr& field, const Json& j);

Json report_to_json(const SigmaReport& r);
Json construction_to_json(const ConstructionResult& r);

// A full eval configuration.
struct EvalConfig {
  FieldPtr field;
  PresentationPtr presentation;
  CharacterGroup group;
  std::optional<Monomial> monomial;
};
EvalConfig eval_config_from_json(const Json& j, std::size_t default_cap);

}  // namespace weightsum
