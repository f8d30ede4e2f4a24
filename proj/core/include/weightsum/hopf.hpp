#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weightsum/group.hpp"
#include "weightsum/ring.hpp"

namespace weightsum {

// A word in the (abelian) grouplike generators: list of (name, exponent).
using GroupWord = std::vector<std::pair<std::string, long long>>;

struct GrouplikeGen {
  std::string name;
  std::uint64_t order = 0;  // 0 means infinite order
};

// Skew-primitive generator h with Delta(h) = g (x) h + h (x) g'.
struct SkewGen {
  std::string name;
  GroupWord g;
  GroupWord gp;
};

enum class ConstraintKind { UnitValue, SelfInverse, RootOfUnityDividing, FixedZero };

struct Constraint {
  std::string generator;
  ConstraintKind kind = ConstraintKind::UnitValue;
  std::uint64_t l = 0;  // RootOfUnityDividing parameter
};

// A pointed presentation: abelian grouplike generators, skew-primitive
// generators tagged with their (g, g') words, and "weight-vector" generators
// that every character kills (the quantum examples).  Characters are
// validated against the declared constraints; the builders in qexamples
// encode each example's proven weight group this way.
struct HopfPresentation {
  std::string name;
  std::vector<GrouplikeGen> grouplikes;
  std::vector<SkewGen> skewprims;
  std::vector<std::string> annihilated;
  std::vector<Constraint> constraints;
  // Words whose character value must be 1 (e.g. the SL_q determinant
  // relation u_11 ... u_nn = 1).
  std::vector<GroupWord> unit_products;

  void validate() const;

  const GrouplikeGen* find_grouplike(const std::string& n) const;
  const SkewGen* find_skew(const std::string& n) const;
  bool is_annihilated(const std::string& n) const;
  bool has_generator(const std::string& n) const;
};

using PresentationPtr = std::shared_ptr<const HopfPresentation>;
PresentationPtr make_presentation(HopfPresentation p);  // validates

struct MonomialLetter {
  std::string name;
  long long exponent = 1;  // != 1 only for grouplike letters
};

struct Monomial {
  std::vector<MonomialLetter> letters;

  static Monomial one() { return {}; }
  static Monomial from_word(const GroupWord& w);
  bool empty() const { return letters.empty(); }
  std::string to_string() const;
};

// A validated character (weight): an algebra map H -> R given by its values
// on the generators.
class Character {
 public:
  Character() = default;

  const PresentationPtr& presentation() const { return pres_; }
  const FieldPtr& field() const { return field_; }
  const FieldElement& value(const std::string& generator) const;
  const std::map<std::string, FieldElement>& values() const { return values_; }

  FieldElement eval_word(const GroupWord& w) const;
  FieldElement eval(const Monomial& m) const;  // char_eval: letter-wise product

  bool operator==(const Character& rhs) const;
  bool operator!=(const Character& rhs) const { return !(*this == rhs); }
  std::string key() const;  // canonical dedup key
  std::string to_string() const;

 private:
  friend Character make_character_unchecked(const PresentationPtr&, const FieldPtr&,
                                            std::map<std::string, FieldElement>);
  PresentationPtr pres_;
  FieldPtr field_;
  std::map<std::string, FieldElement> values_;
};

Character counit(const PresentationPtr& pres, const FieldPtr& field);

// Validates values against the presentation: grouplike values nonzero and of
// order dividing the declared generator order, annihilated generators at 0,
// all constraints satisfied.  Missing grouplike/skew entries are an error;
// annihilated entries may be omitted.
Character validate_character(const PresentationPtr& pres, const FieldPtr& field,
                             const std::map<std::string, FieldElement>& values);

// Convolution (lambda * nu)(h) = (lambda (x) nu)(Delta(h)) on generators:
// grouplike K -> l(K) n(K); skew h -> l(g) n(h) + l(h) n(g'); annihilated -> 0.
Character convolve(const Character& a, const Character& b);

// <lambda^{-1}, h> = <lambda, S(h)>: grouplike K -> l(K)^{-1}, skew
// h -> -l(g)^{-1} l(h) l(g')^{-1}.
Character char_inverse(const Character& a);

// Evaluates (chi_1 (x) ... (x) chi_n)(Delta^{(n-1)}(m)) by expanding Delta on
// each letter and multiplying the per-letter expansions slot-wise.  This is
// deliberately independent of convolve(); it is the oracle the convolution
// code is checked against.
FieldElement delta_power_eval(std::span<const Character> chars, const Monomial& m);

using CharacterGroup = FiniteGroup<Character>;

// Enumerates the subgroup of the weight group generated by `gens` (breadth
// first, CapExceeded beyond `cap`).  Index 0 is the counit.
CharacterGroup generate_character_group(const std::vector<Character>& gens, std::size_t cap);

const PresentationPtr& group_presentation(const CharacterGroup& g);
const FieldPtr& group_field(const CharacterGroup& g);

// Grouplike-word helpers shared by charsum and the builders.
GroupWord word_concat(const GroupWord& a, const GroupWord& b);
GroupWord word_inverse(const GroupWord& a);

}  // namespace weightsum
