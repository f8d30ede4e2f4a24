#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "weightsum/error.hpp"

namespace weightsum {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class FieldKind { Rational, Cyclotomic, Prime, PrimeExt };

// Exact coefficient fields: Q, Q(zeta_m), F_p and F_p[x]/(f).  All theorem
// arithmetic in the library happens in elements of these fields; there is no
// floating point anywhere.
struct FieldSpec {
  FieldKind kind = FieldKind::Rational;
  std::uint64_t m = 0;                  // Cyclotomic: order of zeta
  std::uint64_t p = 0;                  // Prime / PrimeExt: characteristic
  std::vector<std::uint64_t> modulus;   // PrimeExt: monic poly, low degree first

  static FieldSpec rational() { return {}; }
  static FieldSpec cyclotomic(std::uint64_t m) {
    FieldSpec s;
    s.kind = FieldKind::Cyclotomic;
    s.m = m;
    return s;
  }
  static FieldSpec prime(std::uint64_t p) {
    FieldSpec s;
    s.kind = FieldKind::Prime;
    s.p = p;
    return s;
  }
  static FieldSpec prime_ext(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    FieldSpec s;
    s.kind = FieldKind::PrimeExt;
    s.p = p;
    s.modulus = std::move(modulus);
    return s;
  }

  bool operator==(const FieldSpec& other) const;
  std::string describe() const;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class FieldElement {
 public:
  FieldElement() = default;

  const FieldPtr& field() const { return owner_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;  // throws DivisionByZero
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  FieldElement inverse() const;             // throws DivisionByZero
  FieldElement pow(long long e) const;      // negative exponents via inverse

  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

  // Least n >= 1 with x^n = 1, or 0 if none <= cap.  Requires x != 0.
  std::uint64_t multiplicative_order(std::uint64_t cap = 1 << 20) const;

  std::string to_string() const;

  // Canonical coefficients of the reduced representative as exact decimal /
  // fraction strings: one entry for Q and F_p, the coefficients in powers of
  // zeta resp. t otherwise.  Parseable back through the config schema.
  std::vector<std::string> coefficients() const;

 private:
  friend class Field;
  using CycloRepr = std::vector<Rat>;            // coeffs in 1, z, ..., z^{phi(m)-1}
  using ExtRepr = std::vector<std::uint64_t>;    // coeffs mod (p, modulus)

  FieldPtr owner_;
  std::variant<Rat, CycloRepr, std::uint64_t, ExtRepr> repr_;
};

class Field : public std::enable_shared_from_this<Field> {
 public:
  // Validates the spec: primality of p, irreducibility of the PrimeExt
  // modulus (trial factorization, degree <= 8), m >= 1.
  static FieldPtr make(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t characteristic() const;      // 0 for Q and Q(zeta_m)
  std::uint64_t order() const;               // field size, 0 if infinite

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_integer(const Int& n) const;
  FieldElement from_integer(long long n) const { return from_integer(Int(n)); }
  FieldElement from_rational(const Rat& q) const;  // denominator must be a unit

  // Generator zeta_m of a cyclotomic field; throws elsewhere.
  FieldElement zeta() const;

  // The class of x in F_p[x]/(f); throws for other kinds.
  FieldElement ext_generator() const;

  // An element of multiplicative order exactly m, or NoSuchRoot.  The choice
  // is deterministic: canonical generator power for cyclotomic fields, the
  // smallest qualifying element in enumeration order for finite fields.
  FieldElement primitive_root_of_unity(std::uint64_t m) const;
  std::optional<FieldElement> try_primitive_root_of_unity(std::uint64_t m) const;

  // All x with x^l = 1 (the full group of l-th roots in this field),
  // deterministic order. l = 0 is rejected for infinite fields.
  std::vector<FieldElement> roots_of_unity_dividing(std::uint64_t l) const;

  bool same_field(const Field& other) const { return spec_ == other.spec_; }

  // Internal canonical data, exposed for the element implementation.
  const std::vector<Int>& cyclotomic_modulus() const { return cyclo_modulus_; }
  std::uint64_t cyclotomic_degree() const { return cyclo_degree_; }

 private:
  Field() = default;
  friend class FieldElement;

  FieldElement wrap_rat(Rat q) const;
  FieldElement wrap_cyclo(std::vector<Rat> coeffs) const;  // reduces mod Phi_m
  FieldElement wrap_prime(std::uint64_t r) const;
  FieldElement wrap_ext(std::vector<std::uint64_t> coeffs) const;

  FieldSpec spec_;
  std::vector<Int> cyclo_modulus_;  // Phi_m, monic, low degree first
  std::uint64_t cyclo_degree_ = 0;  // phi(m)
  std::uint64_t ext_degree_ = 0;    // deg(modulus)
};

// The m-th cyclotomic polynomial over Z, low degree first, monic.
std::vector<Int> cyclotomic_polynomial(std::uint64_t m);

bool is_prime_u64(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t m);
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace weightsum
