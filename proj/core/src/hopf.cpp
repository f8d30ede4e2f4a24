#include "weightsum/hopf.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace weightsum {

void HopfPresentation::validate() const {
  std::set<std::string> names;
  auto claim = [&](const std::string& n) {
    require(!n.empty(), "InvalidSpec", "empty generator name");
    require(names.insert(n).second, "InvalidSpec", "duplicate generator name " + n);
  };
  for (const auto& g : grouplikes) claim(g.name);
  for (const auto& s : skewprims) claim(s.name);
  for (const auto& a : annihilated) claim(a);

  auto check_word = [&](const GroupWord& w, const std::string& where) {
    for (const auto& [gen, exp] : w) {
      (void)exp;
      require(find_grouplike(gen) != nullptr, "InvalidSpec",
              where + " references undeclared grouplike " + gen);
    }
  };
  for (const auto& s : skewprims) {
    check_word(s.g, "skew generator " + s.name);
    check_word(s.gp, "skew generator " + s.name);
  }
  for (const auto& w : unit_products) check_word(w, "unit product");
  for (const auto& c : constraints)
    require(has_generator(c.generator), "InvalidSpec",
            "constraint on undeclared generator " + c.generator);
}

const GrouplikeGen* HopfPresentation::find_grouplike(const std::string& n) const {
  for (const auto& g : grouplikes)
    if (g.name == n) return &g;
  return nullptr;
}

const SkewGen* HopfPresentation::find_skew(const std::string& n) const {
  for (const auto& s : skewprims)
    if (s.name == n) return &s;
  return nullptr;
}

bool HopfPresentation::is_annihilated(const std::string& n) const {
  return std::find(annihilated.begin(), annihilated.end(), n) != annihilated.end();
}

bool HopfPresentation::has_generator(const std::string& n) const {
  return find_grouplike(n) || find_skew(n) || is_annihilated(n);
}

PresentationPtr make_presentation(HopfPresentation p) {
  p.validate();
  return std::make_shared<const HopfPresentation>(std::move(p));
}

Monomial Monomial::from_word(const GroupWord& w) {
  Monomial m;
  for (const auto& [gen, exp] : w)
    if (exp != 0) m.letters.push_back({gen, exp});
  return m;
}

std::string Monomial::to_string() const {
  if (letters.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << "*";
    os << letters[i].name;
    if (letters[i].exponent != 1) os << "^" << letters[i].exponent;
  }
  return os.str();
}

const FieldElement& Character::value(const std::string& generator) const {
  auto it = values_.find(generator);
  require(it != values_.end(), "UnknownGenerator", "no value for generator " + generator);
  return it->second;
}

FieldElement Character::eval_word(const GroupWord& w) const {
  FieldElement acc = field_->one();
  for (const auto& [gen, exp] : w) acc = acc * value(gen).pow(exp);
  return acc;
}

FieldElement Character::eval(const Monomial& m) const {
  FieldElement acc = field_->one();
  for (const auto& letter : m.letters) {
    require(pres_->has_generator(letter.name), "UnknownGenerator",
            "monomial letter " + letter.name + " not in presentation");
    const FieldElement& v = value(letter.name);
    if (letter.exponent == 1) {
      acc = acc * v;
    } else {
      require(pres_->find_grouplike(letter.name) != nullptr, "InvalidSpec",
              "only grouplike letters may carry exponents != 1");
      acc = acc * v.pow(letter.exponent);
    }
    if (acc.is_zero()) return acc;
  }
  return acc;
}

bool Character::operator==(const Character& rhs) const {
  require(pres_ == rhs.pres_, "MixedPresentations", "comparing characters of different algebras");
  return values_ == rhs.values_;
}

std::string Character::key() const {
  std::ostringstream os;
  for (const auto& [name, v] : values_) os << name << "=" << v.to_string() << ";";
  return os.str();
}

std::string Character::to_string() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& [name, v] : values_) {
    if (!first) os << ", ";
    first = false;
    os << name << ":" << v.to_string();
  }
  os << ")";
  return os.str();
}

Character make_character_unchecked(const PresentationPtr& pres, const FieldPtr& field,
                                   std::map<std::string, FieldElement> values) {
  Character c;
  c.pres_ = pres;
  c.field_ = field;
  c.values_ = std::move(values);
  return c;
}

Character counit(const PresentationPtr& pres, const FieldPtr& field) {
  std::map<std::string, FieldElement> values;
  for (const auto& g : pres->grouplikes) values.emplace(g.name, field->one());
  for (const auto& s : pres->skewprims) values.emplace(s.name, field->zero());
  for (const auto& a : pres->annihilated) values.emplace(a, field->zero());
  return make_character_unchecked(pres, field, std::move(values));
}

Character validate_character(const PresentationPtr& pres, const FieldPtr& field,
                             const std::map<std::string, FieldElement>& values) {
  std::map<std::string, FieldElement> full;
  auto lookup = [&](const std::string& name) -> const FieldElement* {
    auto it = values.find(name);
    return it == values.end() ? nullptr : &it->second;
  };
  for (const auto& g : pres->grouplikes) {
    const FieldElement* v = lookup(g.name);
    require(v != nullptr, "ConstraintViolated", "missing value for grouplike " + g.name);
    require(!v->is_zero(), "ZeroGrouplikeValue", "grouplike " + g.name + " sent to 0");
    if (g.order > 0)
      require(v->pow(static_cast<long long>(g.order)).is_one(), "ConstraintViolated",
              "value of " + g.name + " is not a " + std::to_string(g.order) + "-th root of unity");
    full.emplace(g.name, *v);
  }
  for (const auto& s : pres->skewprims) {
    const FieldElement* v = lookup(s.name);
    require(v != nullptr, "ConstraintViolated", "missing value for skew generator " + s.name);
    full.emplace(s.name, *v);
  }
  for (const auto& a : pres->annihilated) {
    const FieldElement* v = lookup(a);
    if (v) require(v->is_zero(), "ConstraintViolated", "weight-vector generator " + a + " not killed");
    full.emplace(a, field->zero());
  }
  for (const auto& [name, v] : values) {
    (void)v;
    require(pres->has_generator(name), "UnknownGenerator", "value for unknown generator " + name);
  }

  Character c = make_character_unchecked(pres, field, std::move(full));
  for (const auto& constraint : pres->constraints) {
    const FieldElement& v = c.value(constraint.generator);
    switch (constraint.kind) {
      case ConstraintKind::UnitValue:
        require(!v.is_zero(), "ConstraintViolated", constraint.generator + " must be a unit");
        break;
      case ConstraintKind::SelfInverse:
        require((v * v).is_one(), "ConstraintViolated",
                constraint.generator + " must square to 1");
        break;
      case ConstraintKind::RootOfUnityDividing:
        if (constraint.l == 0) {
          require(!v.is_zero(), "ConstraintViolated", constraint.generator + " must be a unit");
        } else {
          require(v.pow(static_cast<long long>(constraint.l)).is_one(), "ConstraintViolated",
                  constraint.generator + " must be an " + std::to_string(constraint.l) +
                      "-th root of unity");
        }
        break;
      case ConstraintKind::FixedZero:
        require(v.is_zero(), "ConstraintViolated", constraint.generator + " must be 0");
        break;
    }
  }
  for (const auto& w : pres->unit_products)
    require(c.eval_word(w).is_one(), "ConstraintViolated", "unit-product relation violated");
  return c;
}

namespace {

const FieldPtr& common_field(const Character& a, const Character& b) {
  require(a.presentation() == b.presentation(), "MixedPresentations",
          "characters of different presentations");
  require(a.field() && b.field() && a.field()->same_field(*b.field()), "MixedFields",
          "characters over different fields");
  return a.field();
}

}  // namespace

Character convolve(const Character& a, const Character& b) {
  const FieldPtr& F = common_field(a, b);
  const auto& pres = a.presentation();
  std::map<std::string, FieldElement> values;
  for (const auto& g : pres->grouplikes) values.emplace(g.name, a.value(g.name) * b.value(g.name));
  for (const auto& s : pres->skewprims)
    values.emplace(s.name,
                   a.eval_word(s.g) * b.value(s.name) + a.value(s.name) * b.eval_word(s.gp));
  for (const auto& ann : pres->annihilated) values.emplace(ann, F->zero());
  return make_character_unchecked(pres, F, std::move(values));
}

Character char_inverse(const Character& a) {
  const auto& pres = a.presentation();
  const FieldPtr& F = a.field();
  std::map<std::string, FieldElement> values;
  for (const auto& g : pres->grouplikes) values.emplace(g.name, a.value(g.name).inverse());
  for (const auto& s : pres->skewprims)
    values.emplace(s.name,
                   -(a.eval_word(s.g).inverse() * a.value(s.name) * a.eval_word(s.gp).inverse()));
  for (const auto& ann : pres->annihilated) values.emplace(ann, F->zero());
  return make_character_unchecked(pres, F, std::move(values));
}

FieldElement delta_power_eval(std::span<const Character> chars, const Monomial& m) {
  require(!chars.empty(), "InvalidSpec", "need at least one character");
  const auto& pres = chars[0].presentation();
  const FieldPtr& F = chars[0].field();
  for (const auto& c : chars) common_field(chars[0], c);

  std::size_t n = chars.size();
  FieldElement total = F->one();
  for (const auto& letter : m.letters) {
    require(pres->has_generator(letter.name), "UnknownGenerator",
            "monomial letter " + letter.name + " not in presentation");
    if (pres->is_annihilated(letter.name)) return F->zero();
    if (const GrouplikeGen* g = pres->find_grouplike(letter.name)) {
      // Delta(K^e) = K^e (x) ... (x) K^e: diagonal.
      FieldElement factor = F->one();
      for (std::size_t s = 0; s < n; ++s)
        factor = factor * chars[s].value(g->name).pow(letter.exponent);
      total = total * factor;
    } else {
      // Delta^{(n-1)}(h) = sum_i g^{(x)i} (x) h (x) g'^{(x)(n-1-i)}.
      const SkewGen* sk = pres->find_skew(letter.name);
      require(letter.exponent == 1, "InvalidSpec", "skew letters carry exponent 1");
      FieldElement sum = F->zero();
      for (std::size_t i = 0; i < n; ++i) {
        FieldElement term = F->one();
        for (std::size_t s = 0; s < i; ++s) term = term * chars[s].eval_word(sk->g);
        term = term * chars[i].value(sk->name);
        for (std::size_t s = i + 1; s < n; ++s) term = term * chars[s].eval_word(sk->gp);
        sum = sum + term;
      }
      total = total * sum;
    }
  }
  return total;
}

CharacterGroup generate_character_group(const std::vector<Character>& gens, std::size_t cap) {
  return close_group(
      gens, [](const Character& a, const Character& b) { return convolve(a, b); },
      [](const Character& a) { return char_inverse(a); },
      [](const Character& a) { return a.key(); }, cap);
}

const PresentationPtr& group_presentation(const CharacterGroup& g) {
  require(!g.elements.empty(), "InvalidSpec", "empty character group");
  return g.elements[0].presentation();
}

const FieldPtr& group_field(const CharacterGroup& g) {
  require(!g.elements.empty(), "InvalidSpec", "empty character group");
  return g.elements[0].field();
}

GroupWord word_concat(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  for (const auto& [gen, exp] : b) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& t) { return t.first == gen; });
    if (it == out.end())
      out.emplace_back(gen, exp);
    else
      it->second += exp;
  }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

GroupWord word_inverse(const GroupWord& a) {
  GroupWord out = a;
  for (auto& [gen, exp] : out) exp = -exp;
  return out;
}

}  // namespace weightsum
