#include "weightsum/config.hpp"

#include <algorithm>

#include "weightsum/qexamples.hpp"

namespace weightsum {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail("ParseError", what); }

long long to_ll(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_fail(std::string(what) + " must be an integer");
  return j.get<long long>();
}

}  // namespace

FieldSpec field_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) parse_fail("field needs a \"kind\"");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return FieldSpec::rational();
  if (kind == "cyclotomic") return FieldSpec::cyclotomic(to_ll(j.at("m"), "m"));
  if (kind == "prime") return FieldSpec::prime(to_ll(j.at("p"), "p"));
  if (kind == "prime_ext") {
    std::vector<std::uint64_t> modulus;
    for (const auto& c : j.at("modulus")) modulus.push_back(to_ll(c, "modulus coefficient"));
    return FieldSpec::prime_ext(to_ll(j.at("p"), "p"), std::move(modulus));
  }
  parse_fail("unknown field kind " + kind);
}

Json field_spec_to_json(const FieldSpec& spec) {
  Json j;
  switch (spec.kind) {
    case FieldKind::Rational:
      j["kind"] = "rational";
      break;
    case FieldKind::Cyclotomic:
      j["kind"] = "cyclotomic";
      j["m"] = spec.m;
      break;
    case FieldKind::Prime:
      j["kind"] = "prime";
      j["p"] = spec.p;
      break;
    case FieldKind::PrimeExt:
      j["kind"] = "prime_ext";
      j["p"] = spec.p;
      j["modulus"] = spec.modulus;
      break;
  }
  return j;
}

namespace {

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    parse_fail("bad rational literal: " + s);
  }
}

}  // namespace

FieldElement element_from_json(const FieldPtr& field, const Json& j) {
  if (j.is_number_integer()) return field->from_integer(j.get<long long>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    bool negate = false;
    if (!s.empty() && s[0] == '-' && s.find("zeta") != std::string::npos) {
      negate = true;
      s = s.substr(1);
    }
    if (s.rfind("zeta", 0) == 0) {
      long long e = 1;
      if (s.size() > 4) {
        if (s[4] != '^') parse_fail("bad zeta literal: " + s);
        e = std::stoll(s.substr(5));
      }
      require(field->spec().kind == FieldKind::Cyclotomic, "ParseError",
              "zeta literals need a cyclotomic field");
      FieldElement z = field->zeta().pow(e);
      return negate ? -z : z;
    }
    return field->from_rational(parse_rat(s));
  }
  if (j.is_object() && j.contains("poly")) {
    const auto& coeffs = j.at("poly");
    FieldElement acc = field->zero();
    FieldElement var;
    switch (field->spec().kind) {
      case FieldKind::Cyclotomic:
        var = field->zeta();
        break;
      case FieldKind::PrimeExt:
        var = field->ext_generator();
        break;
      default:
        parse_fail("poly elements need a cyclotomic or extension field");
    }
    FieldElement power = field->one();
    for (const auto& c : coeffs) {
      FieldElement coeff = c.is_string() ? field->from_rational(parse_rat(c.get<std::string>()))
                                         : field->from_integer(to_ll(c, "poly coefficient"));
      acc = acc + coeff * power;
      power = power * var;
    }
    return acc;
  }
  parse_fail("cannot parse field element " + j.dump());
}

Json element_to_json(const FieldElement& e) {
  auto coeffs = e.coefficients();
  if (!e.field()) return Json(nullptr);
  switch (e.field()->spec().kind) {
    case FieldKind::Rational:
    case FieldKind::Prime:
      return Json(coeffs[0]);
    default: {
      Json j;
      j["poly"] = coeffs;
      return j;
    }
  }
}

GroupWord parse_word(const std::string& text) {
  GroupWord w;
  if (text.empty() || text == "1") return w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t star = text.find('*', pos);
    std::string token = text.substr(pos, star == std::string::npos ? star : star - pos);
    pos = (star == std::string::npos) ? text.size() : star + 1;
    if (token.empty()) parse_fail("empty factor in word: " + text);
    auto caret = token.find('^');
    std::string name = token.substr(0, caret);
    long long exp = 1;
    if (caret != std::string::npos) {
      try {
        exp = std::stoll(token.substr(caret + 1));
      } catch (const std::exception&) {
        parse_fail("bad exponent in " + token);
      }
    }
    w.emplace_back(name, exp);
  }
  return w;
}

Monomial parse_monomial(const std::string& text) {
  Monomial m;
  for (const auto& [name, exp] : parse_word(text)) m.letters.push_back({name, exp});
  return m;
}

namespace {

std::string word_to_string(const GroupWord& w) {
  return Monomial::from_word(w).to_string();
}

ConstraintKind constraint_kind_from_string(const std::string& s) {
  if (s == "unit_value") return ConstraintKind::UnitValue;
  if (s == "self_inverse") return ConstraintKind::SelfInverse;
  if (s == "root_of_unity_dividing") return ConstraintKind::RootOfUnityDividing;
  if (s == "fixed_zero") return ConstraintKind::FixedZero;
  parse_fail("unknown constraint predicate " + s);
}

std::string constraint_kind_to_string(ConstraintKind k) {
  switch (k) {
    case ConstraintKind::UnitValue:
      return "unit_value";
    case ConstraintKind::SelfInverse:
      return "self_inverse";
    case ConstraintKind::RootOfUnityDividing:
      return "root_of_unity_dividing";
    case ConstraintKind::FixedZero:
      return "fixed_zero";
  }
  return "?";
}

}  // namespace

HopfPresentation presentation_from_json(const Json& j) {
  HopfPresentation p;
  p.name = j.value("name", std::string("custom"));
  for (const auto& g : j.value("grouplikes", Json::array()))
    p.grouplikes.push_back(
        {g.at("name").get<std::string>(), static_cast<std::uint64_t>(to_ll(g.at("order"), "order"))});
  for (const auto& s : j.value("skewprims", Json::array()))
    p.skewprims.push_back({s.at("name").get<std::string>(),
                           parse_word(s.value("g", std::string("1"))),
                           parse_word(s.value("gp", std::string("1")))});
  for (const auto& a : j.value("annihilated", Json::array()))
    p.annihilated.push_back(a.get<std::string>());
  for (const auto& c : j.value("constraints", Json::array())) {
    Constraint constraint;
    constraint.generator = c.at("generator").get<std::string>();
    constraint.kind = constraint_kind_from_string(c.at("predicate").get<std::string>());
    constraint.l = c.value("l", 0);
    p.constraints.push_back(std::move(constraint));
  }
  for (const auto& w : j.value("unit_products", Json::array()))
    p.unit_products.push_back(parse_word(w.get<std::string>()));
  return p;
}

Json presentation_to_json(const HopfPresentation& p) {
  Json j;
  j["name"] = p.name;
  j["grouplikes"] = Json::array();
  for (const auto& g : p.grouplikes) j["grouplikes"].push_back({{"name", g.name}, {"order", g.order}});
  j["skewprims"] = Json::array();
  for (const auto& s : p.skewprims)
    j["skewprims"].push_back(
        {{"name", s.name}, {"g", word_to_string(s.g)}, {"gp", word_to_string(s.gp)}});
  j["annihilated"] = p.annihilated;
  j["constraints"] = Json::array();
  for (const auto& c : p.constraints) {
    Json cj = {{"generator", c.generator}, {"predicate", constraint_kind_to_string(c.kind)}};
    if (c.kind == ConstraintKind::RootOfUnityDividing) cj["l"] = c.l;
    j["constraints"].push_back(std::move(cj));
  }
  j["unit_products"] = Json::array();
  for (const auto& w : p.unit_products) j["unit_products"].push_back(word_to_string(w));
  return j;
}

PresentationPtr builder_from_json(const Json& j) {
  std::string name = j.at("name").get<std::string>();
  if (name == "hn") return build_hn(to_ll(j.at("n"), "n"));
  if (name == "group_ring") return build_group_ring(to_ll(j.at("n"), "n"), to_ll(j.at("l"), "l"));
  if (name == "uql") return build_uql(to_ll(j.at("rank"), "rank"), to_ll(j.at("l"), "l"));
  if (name == "borel") return build_borel(to_ll(j.at("rank"), "rank"), to_ll(j.at("l"), "l"));
  if (name == "affine_space")
    return build_affine_space(to_ll(j.at("rank"), "rank"), to_ll(j.at("l"), "l"));
  if (name == "virasoro") {
    std::vector<long long> e;
    for (const auto& idx : j.value("e_indices", Json::array())) e.push_back(to_ll(idx, "index"));
    return build_virasoro(e);
  }
  if (name == "quantum_gl") return build_quantum_gl(to_ll(j.at("n"), "n"));
  if (name == "quantum_sl") return build_quantum_sl(to_ll(j.at("n"), "n"));
  parse_fail("unknown builder " + name);
}

Json character_to_json(const Character& chi) {
  Json values = Json::object();
  for (const auto& [name, v] : chi.values()) values[name] = element_to_json(v);
  return values;
}

Character character_from_json(const PresentationPtr& pres, const FieldPtr& field, const Json& j) {
  std::map<std::string, FieldElement> values;
  if (!j.is_object()) parse_fail("character must be an object of generator values");
  for (const auto& [name, v] : j.items()) values.emplace(name, element_from_json(field, v));
  return validate_character(pres, field, values);
}

Json report_to_json(const SigmaReport& r) {
  Json j;
  j["brute"] = r.brute ? Json(r.brute->to_string()) : Json(nullptr);
  j["closed"] = r.closed ? Json(r.closed->to_string()) : Json(nullptr);
  j["path"] = r.path;
  j["agree"] = r.agree;
  j["witnesses"] = Json::array();
  for (const auto& w : r.witnesses)
    j["witnesses"].push_back({{"character", w.character}, {"note", w.note}});
  return j;
}

Json construction_to_json(const ConstructionResult& r) {
  Json j;
  j["presentation"] = presentation_to_json(*r.presentation);
  j["group"] = Json::array();
  for (const auto& chi : r.group.elements) j["group"].push_back(character_to_json(chi));
  j["generators"] = r.group.generator_indices;
  j["monomial"] = r.monomial.to_string();
  j["target"] = r.target.to_string();
  j["achieved"] = r.achieved.to_string();
  j["order"] = r.group.order();
  return j;
}

EvalConfig eval_config_from_json(const Json& j, std::size_t default_cap) {
  EvalConfig cfg;
  if (!j.contains("field")) parse_fail("config needs a \"field\"");
  cfg.field = Field::make(field_spec_from_json(j.at("field")));
  if (j.contains("builder"))
    cfg.presentation = builder_from_json(j.at("builder"));
  else if (j.contains("presentation")) {
    cfg.presentation = make_presentation(presentation_from_json(j.at("presentation")));
  } else {
    parse_fail("config needs a \"presentation\" or \"builder\"");
  }
  if (!j.contains("group")) parse_fail("config needs a \"group\"");
  const Json& group = j.at("group");
  // default_cap is a hard ceiling (the CLI wires CHARSUM_MAX_GROUP here).
  std::size_t cap = std::min<std::size_t>(group.value("cap", default_cap), default_cap);
  std::vector<Character> gens;
  for (const auto& gj : group.value("generators", Json::array()))
    gens.push_back(character_from_json(cfg.presentation, cfg.field, gj));
  if (gens.empty()) gens.push_back(counit(cfg.presentation, cfg.field));
  cfg.group = generate_character_group(gens, cap);
  if (j.contains("monomial")) cfg.monomial = parse_monomial(j.at("monomial").get<std::string>());
  return cfg;
}

}  // namespace weightsum
