#include "weightsum/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace weightsum {

namespace {

using Poly = std::vector<Int>;      // low degree first
using RatPoly = std::vector<Rat>;   // low degree first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials, divisor monic.
Poly divide_exact(Poly num, const Poly& den) {
  trim(num);
  Poly quot(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, Int(0));
  while (num.size() >= den.size()) {
    Int c = num.back();
    std::size_t shift = num.size() - den.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    trim(num);
  }
  return quot;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inverse_mod_p(std::uint64_t a, std::uint64_t p) {
  require(a % p != 0, "DivisionByZero", "inverse of 0 mod " + std::to_string(p));
  return powmod(a % p, p - 2, p);
}

using FpPoly = std::vector<std::uint64_t>;

void trim_fp(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  trim_fp(r);
  return r;
}

FpPoly fp_mod(FpPoly a, const FpPoly& mod, std::uint64_t p) {
  trim_fp(a);
  std::uint64_t lead_inv = inverse_mod_p(mod.back(), p);
  while (a.size() >= mod.size()) {
    std::uint64_t c = mulmod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - mod.size();
    for (std::size_t i = 0; i < mod.size(); ++i) {
      std::uint64_t t = mulmod(c, mod[i], p);
      a[shift + i] = (a[shift + i] + p - t) % p;
    }
    trim_fp(a);
  }
  return a;
}

// Extended Euclid in F_p[x]: returns (g, u) with u*a = g mod m, g = gcd(a, m).
std::pair<FpPoly, FpPoly> fp_ext_gcd(FpPoly a, FpPoly m, std::uint64_t p) {
  FpPoly r0 = std::move(m), r1 = std::move(a);
  FpPoly u0 = {}, u1 = {1};
  trim_fp(r0);
  trim_fp(r1);
  while (!r1.empty()) {
    // r0 = q*r1 + r, by long division
    FpPoly q;
    FpPoly rem = r0;
    std::uint64_t lead_inv = inverse_mod_p(r1.back(), p);
    if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
    while (rem.size() >= r1.size()) {
      std::uint64_t c = mulmod(rem.back(), lead_inv, p);
      std::size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) {
        std::uint64_t t = mulmod(c, r1[i], p);
        rem[shift + i] = (rem[shift + i] + p - t) % p;
      }
      trim_fp(rem);
    }
    FpPoly qu1 = fp_mul(q, u1, p);
    FpPoly u2(std::max(u0.size(), qu1.size()), 0);
    for (std::size_t i = 0; i < u0.size(); ++i) u2[i] = u0[i];
    for (std::size_t i = 0; i < qu1.size(); ++i) u2[i] = (u2[i] + p - qu1[i] % p) % p;
    trim_fp(u2);
    r0 = r1;
    r1 = rem;
    u0 = u1;
    u1 = u2;
  }
  return {r0, u0};
}

RatPoly rat_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

RatPoly rat_mod(RatPoly a, const std::vector<Int>& monic_mod) {
  trim(a);
  while (a.size() >= monic_mod.size()) {
    Rat c = a.back();
    std::size_t shift = a.size() - monic_mod.size();
    for (std::size_t i = 0; i < monic_mod.size(); ++i) a[shift + i] -= c * Rat(monic_mod[i]);
    trim(a);
  }
  return a;
}

// Extended Euclid in Q[x] against the (irreducible) modulus.
RatPoly rat_inverse_mod(RatPoly a, const std::vector<Int>& monic_mod) {
  RatPoly r0(monic_mod.size());
  for (std::size_t i = 0; i < monic_mod.size(); ++i) r0[i] = Rat(monic_mod[i]);
  RatPoly r1 = std::move(a), u0 = {}, u1 = {Rat(1)};
  trim(r1);
  while (!(r1.size() == 1 || r1.empty())) {
    RatPoly q;
    RatPoly rem = r0;
    if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, Rat(0));
    while (rem.size() >= r1.size()) {
      Rat c = rem.back() / r1.back();
      std::size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
      trim(rem);
    }
    RatPoly qu1 = rat_mul(q, u1);
    RatPoly u2(std::max(u0.size(), qu1.size()), Rat(0));
    for (std::size_t i = 0; i < u0.size(); ++i) u2[i] = u0[i];
    for (std::size_t i = 0; i < qu1.size(); ++i) u2[i] -= qu1[i];
    trim(u2);
    r0 = r1;
    r1 = rem;
    u0 = u1;
    u1 = u2;
  }
  require(!r1.empty(), "DivisionByZero", "inverse of 0 in cyclotomic field");
  // r1 is a nonzero constant c with u1 * a = c mod Phi; scale.
  Rat c = r1[0];
  for (auto& coef : u1) coef /= c;
  return u1;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t result = m;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      while (m % d == 0) m /= d;
      result -= result / d;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ds;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::vector<Int> cyclotomic_polynomial(std::uint64_t m) {
  require(m >= 1, "InvalidSpec", "cyclotomic order must be >= 1");
  Poly num(m + 1, Int(0));
  num[0] = -1;
  num[m] = 1;  // x^m - 1
  for (std::uint64_t d : divisors(m)) {
    if (d == m) continue;
    Poly phi_d = cyclotomic_polynomial(d);
    num = divide_exact(std::move(num), phi_d);
  }
  return num;
}

bool FieldSpec::operator==(const FieldSpec& other) const {
  return kind == other.kind && m == other.m && p == other.p && modulus == other.modulus;
}

std::string FieldSpec::describe() const {
  switch (kind) {
    case FieldKind::Rational:
      return "Q";
    case FieldKind::Cyclotomic:
      return "Q(zeta_" + std::to_string(m) + ")";
    case FieldKind::Prime:
      return "F_" + std::to_string(p);
    case FieldKind::PrimeExt: {
      std::ostringstream os;
      os << "F_" << p << "[x]/(";
      for (std::size_t i = 0; i < modulus.size(); ++i) {
        if (i) os << ",";
        os << modulus[i];
      }
      os << ")";
      return os.str();
    }
  }
  return "?";
}

FieldPtr Field::make(const FieldSpec& spec) {
  auto f = std::shared_ptr<Field>(new Field());
  f->spec_ = spec;
  switch (spec.kind) {
    case FieldKind::Rational:
      break;
    case FieldKind::Cyclotomic: {
      require(spec.m >= 1, "InvalidSpec", "cyclotomic order must be >= 1");
      require(spec.m <= 1024, "InvalidSpec", "cyclotomic order beyond desk scale");
      f->cyclo_modulus_ = cyclotomic_polynomial(spec.m);
      f->cyclo_degree_ = f->cyclo_modulus_.size() - 1;
      break;
    }
    case FieldKind::Prime: {
      require(is_prime_u64(spec.p), "NotPrime", std::to_string(spec.p) + " is not prime");
      require(spec.p < (1ull << 31), "InvalidSpec", "prime beyond desk scale");
      break;
    }
    case FieldKind::PrimeExt: {
      require(is_prime_u64(spec.p), "NotPrime", std::to_string(spec.p) + " is not prime");
      require(spec.p < (1ull << 31), "InvalidSpec", "prime beyond desk scale");
      auto mod = spec.modulus;
      require(mod.size() >= 2, "InvalidSpec", "extension modulus must have degree >= 1");
      require(mod.size() <= 9, "InvalidSpec", "extension degree capped at 8");
      for (auto& c : mod) c %= spec.p;
      require(mod.back() == 1, "InvalidSpec", "extension modulus must be monic");
      f->spec_.modulus = mod;
      f->ext_degree_ = mod.size() - 1;
      double q = 1;
      for (std::uint64_t i = 0; i < f->ext_degree_; ++i) q *= static_cast<double>(spec.p);
      require(q <= double(1 << 26), "InvalidSpec", "extension field beyond desk scale");
      // Irreducibility by trial factorization: no monic divisor of degree
      // 1..deg/2.  Enumeration over F_p coefficient vectors.
      std::uint64_t deg = f->ext_degree_;
      for (std::uint64_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::uint64_t i = 0; i < d; ++i) count *= spec.p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
          FpPoly cand(d + 1, 0);
          std::uint64_t t = idx;
          for (std::uint64_t i = 0; i < d; ++i) {
            cand[i] = t % spec.p;
            t /= spec.p;
          }
          cand[d] = 1;
          FpPoly rem = fp_mod(mod, cand, spec.p);
          if (rem.empty())
            fail("ReducibleModulus", "modulus has factor of degree " + std::to_string(d));
        }
      }
      break;
    }
  }
  return f;
}

std::uint64_t Field::characteristic() const {
  return (spec_.kind == FieldKind::Prime || spec_.kind == FieldKind::PrimeExt) ? spec_.p : 0;
}

std::uint64_t Field::order() const {
  switch (spec_.kind) {
    case FieldKind::Prime:
      return spec_.p;
    case FieldKind::PrimeExt: {
      std::uint64_t q = 1;
      for (std::uint64_t i = 0; i < ext_degree_; ++i) q *= spec_.p;
      return q;
    }
    default:
      return 0;
  }
}

FieldElement Field::wrap_rat(Rat q) const {
  FieldElement e;
  e.owner_ = shared_from_this();
  e.repr_ = std::move(q);
  return e;
}

FieldElement Field::wrap_cyclo(std::vector<Rat> coeffs) const {
  FieldElement e;
  e.owner_ = shared_from_this();
  auto reduced = rat_mod(std::move(coeffs), cyclo_modulus_);
  reduced.resize(cyclo_degree_, Rat(0));
  e.repr_ = std::move(reduced);
  return e;
}

FieldElement Field::wrap_prime(std::uint64_t r) const {
  FieldElement e;
  e.owner_ = shared_from_this();
  e.repr_ = r % spec_.p;
  return e;
}

FieldElement Field::wrap_ext(std::vector<std::uint64_t> coeffs) const {
  FieldElement e;
  e.owner_ = shared_from_this();
  for (auto& c : coeffs) c %= spec_.p;
  auto reduced = fp_mod(std::move(coeffs), spec_.modulus, spec_.p);
  reduced.resize(ext_degree_, 0);
  e.repr_ = std::move(reduced);
  return e;
}

FieldElement Field::zero() const { return from_integer(Int(0)); }
FieldElement Field::one() const { return from_integer(Int(1)); }

FieldElement Field::from_integer(const Int& n) const {
  switch (spec_.kind) {
    case FieldKind::Rational:
      return wrap_rat(Rat(n));
    case FieldKind::Cyclotomic:
      return wrap_cyclo({Rat(n)});
    case FieldKind::Prime:
    case FieldKind::PrimeExt: {
      Int r = n % Int(spec_.p);
      if (r < 0) r += Int(spec_.p);
      std::uint64_t v = r.convert_to<std::uint64_t>();
      return spec_.kind == FieldKind::Prime ? wrap_prime(v) : wrap_ext({v});
    }
  }
  fail("InvalidSpec", "bad field kind");
}

FieldElement Field::from_rational(const Rat& q) const {
  if (spec_.kind == FieldKind::Rational) return wrap_rat(q);
  if (spec_.kind == FieldKind::Cyclotomic) return wrap_cyclo({q});
  FieldElement num = from_integer(Int(numerator(q)));
  FieldElement den = from_integer(Int(denominator(q)));
  return num / den;
}

FieldElement Field::zeta() const {
  require(spec_.kind == FieldKind::Cyclotomic, "InvalidSpec", "zeta only lives in Q(zeta_m)");
  std::vector<Rat> x(2, Rat(0));
  x[1] = Rat(1);
  return wrap_cyclo(std::move(x));
}

FieldElement Field::ext_generator() const {
  require(spec_.kind == FieldKind::PrimeExt, "InvalidSpec",
          "the polynomial generator only lives in F_p[x]/(f)");
  return wrap_ext({0, 1});
}

std::optional<FieldElement> Field::try_primitive_root_of_unity(std::uint64_t m) const {
  require(m >= 1, "InvalidSpec", "root order must be >= 1");
  switch (spec_.kind) {
    case FieldKind::Rational: {
      if (m == 1) return one();
      if (m == 2) return from_integer(-1);
      return std::nullopt;
    }
    case FieldKind::Cyclotomic: {
      std::uint64_t big = std::lcm<std::uint64_t>(2, spec_.m);
      if (big % m != 0) return std::nullopt;
      FieldElement gen = (spec_.m % 2 == 0) ? zeta() : -zeta();
      return gen.pow(static_cast<long long>(big / m));
    }
    case FieldKind::Prime:
    case FieldKind::PrimeExt: {
      std::uint64_t q = order();
      if ((q - 1) % m != 0) return std::nullopt;
      // Canonical generator of the unit group: first element of order q-1 in
      // enumeration order (digits base p, constant coefficient fastest).
      auto element_at = [&](std::uint64_t idx) {
        if (spec_.kind == FieldKind::Prime) return wrap_prime(idx);
        std::vector<std::uint64_t> coeffs(ext_degree_, 0);
        for (std::uint64_t i = 0; i < ext_degree_; ++i) {
          coeffs[i] = idx % spec_.p;
          idx /= spec_.p;
        }
        return wrap_ext(std::move(coeffs));
      };
      auto ds = divisors(q - 1);
      for (std::uint64_t idx = 1; idx < q; ++idx) {
        FieldElement cand = element_at(idx);
        bool primitive = true;
        for (std::uint64_t d : ds) {
          if (d == q - 1) continue;
          if (cand.pow(static_cast<long long>(d)).is_one()) {
            primitive = false;
            break;
          }
        }
        if (primitive) return cand.pow(static_cast<long long>((q - 1) / m));
      }
      return std::nullopt;  // unreachable: F_q^x is cyclic
    }
  }
  return std::nullopt;
}

FieldElement Field::primitive_root_of_unity(std::uint64_t m) const {
  auto r = try_primitive_root_of_unity(m);
  require(r.has_value(), "NoSuchRoot",
          "no primitive " + std::to_string(m) + "-th root of unity in " + spec_.describe());
  return *r;
}

std::vector<FieldElement> Field::roots_of_unity_dividing(std::uint64_t l) const {
  std::uint64_t big;  // order of the full (finite) group of roots of unity
  switch (spec_.kind) {
    case FieldKind::Rational:
      big = 2;
      break;
    case FieldKind::Cyclotomic:
      big = std::lcm<std::uint64_t>(2, spec_.m);
      break;
    default:
      big = order() - 1;
      break;
  }
  std::uint64_t d = (l == 0) ? big : gcd_u64(big, l);
  FieldElement g = primitive_root_of_unity(d);
  std::vector<FieldElement> roots;
  FieldElement cur = one();
  for (std::uint64_t j = 0; j < d; ++j) {
    roots.push_back(cur);
    cur = cur * g;
  }
  return roots;
}

namespace {

const Field& check_owners(const FieldElement& a, const FieldElement& b) {
  require(a.field() && b.field(), "MixedFields", "element without field");
  require(a.field()->same_field(*b.field()), "MixedFields",
          "mixing " + a.field()->spec().describe() + " with " + b.field()->spec().describe());
  return *a.field();
}

}  // namespace

bool FieldElement::is_zero() const {
  return std::visit(
      [](const auto& r) -> bool {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Rat>) return r == 0;
        if constexpr (std::is_same_v<T, CycloRepr>) {
          for (const auto& c : r)
            if (c != 0) return false;
          return true;
        }
        if constexpr (std::is_same_v<T, std::uint64_t>) return r == 0;
        if constexpr (std::is_same_v<T, ExtRepr>) {
          for (auto c : r)
            if (c != 0) return false;
          return true;
        }
      },
      repr_);
}

bool FieldElement::is_one() const {
  return owner_ && *this == owner_->one();
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  check_owners(*this, rhs);
  return repr_ == rhs.repr_;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  const Field& F = check_owners(*this, rhs);
  switch (F.spec().kind) {
    case FieldKind::Rational:
      return F.wrap_rat(std::get<Rat>(repr_) + std::get<Rat>(rhs.repr_));
    case FieldKind::Cyclotomic: {
      auto a = std::get<CycloRepr>(repr_);
      const auto& b = std::get<CycloRepr>(rhs.repr_);
      for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
      return F.wrap_cyclo(std::move(a));
    }
    case FieldKind::Prime:
      return F.wrap_prime((std::get<std::uint64_t>(repr_) + std::get<std::uint64_t>(rhs.repr_)) %
                          F.spec().p);
    case FieldKind::PrimeExt: {
      auto a = std::get<ExtRepr>(repr_);
      const auto& b = std::get<ExtRepr>(rhs.repr_);
      for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % F.spec().p;
      return F.wrap_ext(std::move(a));
    }
  }
  fail("InvalidSpec", "bad field kind");
}

FieldElement FieldElement::operator-() const {
  require(owner_ != nullptr, "MixedFields", "element without field");
  const Field& F = *owner_;
  switch (F.spec().kind) {
    case FieldKind::Rational:
      return F.wrap_rat(-std::get<Rat>(repr_));
    case FieldKind::Cyclotomic: {
      auto a = std::get<CycloRepr>(repr_);
      for (auto& c : a) c = -c;
      return F.wrap_cyclo(std::move(a));
    }
    case FieldKind::Prime: {
      auto v = std::get<std::uint64_t>(repr_);
      return F.wrap_prime(v == 0 ? 0 : F.spec().p - v);
    }
    case FieldKind::PrimeExt: {
      auto a = std::get<ExtRepr>(repr_);
      for (auto& c : a) c = (c == 0) ? 0 : F.spec().p - c;
      return F.wrap_ext(std::move(a));
    }
  }
  fail("InvalidSpec", "bad field kind");
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const { return *this + (-rhs); }

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  const Field& F = check_owners(*this, rhs);
  switch (F.spec().kind) {
    case FieldKind::Rational:
      return F.wrap_rat(std::get<Rat>(repr_) * std::get<Rat>(rhs.repr_));
    case FieldKind::Cyclotomic:
      return F.wrap_cyclo(rat_mul(std::get<CycloRepr>(repr_), std::get<CycloRepr>(rhs.repr_)));
    case FieldKind::Prime:
      return F.wrap_prime(mulmod(std::get<std::uint64_t>(repr_),
                                 std::get<std::uint64_t>(rhs.repr_), F.spec().p));
    case FieldKind::PrimeExt:
      return F.wrap_ext(fp_mul(std::get<ExtRepr>(repr_), std::get<ExtRepr>(rhs.repr_), F.spec().p));
  }
  fail("InvalidSpec", "bad field kind");
}

FieldElement FieldElement::inverse() const {
  require(owner_ != nullptr, "MixedFields", "element without field");
  require(!is_zero(), "DivisionByZero", "inverse of zero");
  const Field& F = *owner_;
  switch (F.spec().kind) {
    case FieldKind::Rational:
      return F.wrap_rat(Rat(1) / std::get<Rat>(repr_));
    case FieldKind::Cyclotomic: {
      RatPoly a = std::get<CycloRepr>(repr_);
      trim(a);
      return F.wrap_cyclo(rat_inverse_mod(std::move(a), F.cyclotomic_modulus()));
    }
    case FieldKind::Prime:
      return F.wrap_prime(inverse_mod_p(std::get<std::uint64_t>(repr_), F.spec().p));
    case FieldKind::PrimeExt: {
      FpPoly a = std::get<ExtRepr>(repr_);
      trim_fp(a);
      auto [g, u] = fp_ext_gcd(a, F.spec().modulus, F.spec().p);
      require(g.size() == 1, "ReducibleModulus", "gcd with modulus not constant");
      std::uint64_t scale = inverse_mod_p(g[0], F.spec().p);
      for (auto& c : u) c = mulmod(c, scale, F.spec().p);
      return F.wrap_ext(std::move(u));
    }
  }
  fail("InvalidSpec", "bad field kind");
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const { return *this * rhs.inverse(); }

FieldElement FieldElement::pow(long long e) const {
  require(owner_ != nullptr, "MixedFields", "element without field");
  if (e < 0) return inverse().pow(-e);
  FieldElement base = *this;
  FieldElement acc = owner_->one();
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::uint64_t FieldElement::multiplicative_order(std::uint64_t cap) const {
  require(!is_zero(), "DivisionByZero", "order of zero");
  const Field& F = *owner_;
  std::uint64_t big = 0;
  switch (F.spec().kind) {
    case FieldKind::Rational:
      big = 2;
      break;
    case FieldKind::Cyclotomic:
      big = std::lcm<std::uint64_t>(2, F.spec().m);
      break;
    default:
      big = F.order() - 1;
      break;
  }
  if (!pow(static_cast<long long>(big)).is_one()) return 0;  // not a root of unity
  for (std::uint64_t d : divisors(big)) {
    if (d > cap) break;
    if (pow(static_cast<long long>(d)).is_one()) return d;
  }
  return 0;
}

std::vector<std::string> FieldElement::coefficients() const {
  std::vector<std::string> out;
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Rat>) {
          std::ostringstream os;
          os << r;
          out.push_back(os.str());
        } else if constexpr (std::is_same_v<T, std::uint64_t>) {
          out.push_back(std::to_string(r));
        } else if constexpr (std::is_same_v<T, CycloRepr>) {
          for (const auto& c : r) {
            std::ostringstream os;
            os << c;
            out.push_back(os.str());
          }
        } else if constexpr (std::is_same_v<T, ExtRepr>) {
          for (auto c : r) out.push_back(std::to_string(c));
        }
      },
      repr_);
  return out;
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Rat>) {
          os << r;
        } else if constexpr (std::is_same_v<T, std::uint64_t>) {
          os << r;
        } else if constexpr (std::is_same_v<T, CycloRepr>) {
          bool first = true;
          for (std::size_t i = 0; i < r.size(); ++i) {
            if (r[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0) {
              os << r[i];
            } else {
              if (r[i] != 1) os << r[i] << "*";
              os << "z";
              if (i > 1) os << "^" << i;
            }
          }
          if (first) os << "0";
        } else if constexpr (std::is_same_v<T, ExtRepr>) {
          bool first = true;
          for (std::size_t i = 0; i < r.size(); ++i) {
            if (r[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0) {
              os << r[i];
            } else {
              if (r[i] != 1) os << r[i] << "*";
              os << "t";
              if (i > 1) os << "^" << i;
            }
          }
          if (first) os << "0";
        }
      },
      repr_);
  return os.str();
}

}  // namespace weightsum
