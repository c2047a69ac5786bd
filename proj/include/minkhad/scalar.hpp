#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace minkhad {

/// Conventional computer-algebra default modulus.
inline constexpr std::uint64_t kDefaultPrime = 32003;

/// Coefficient domain: exact rationals (p == 0) or the prime field F_p.
struct FieldSpec {
  std::uint64_t p = 0;

  bool rational() const { return p == 0; }
  bool operator==(const FieldSpec&) const = default;

  static FieldSpec q() { return FieldSpec{0}; }
  static FieldSpec fp(std::uint64_t prime) {
    if (prime < 3 || prime >= (std::uint64_t{1} << 32))
      throw std::invalid_argument("prime field modulus must satisfy 3 <= p < 2^32");
    return FieldSpec{prime};
  }
};

namespace detail {

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) acc = acc * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return acc;
}

inline std::uint64_t mod_inverse(std::uint64_t v, std::uint64_t p) {
  if (v == 0) throw std::domain_error("division by zero in F_p");
  return mod_pow(v, p - 2, p);  // p prime
}

}  // namespace detail

/// An element of the working field. Immutable value type; arithmetic never
/// mixes modes or moduli.
class Scalar {
 public:
  Scalar() : rep_(mpq_class(0)) {}

  static Scalar rational(mpq_class q) {
    q.canonicalize();
    return Scalar(std::move(q));
  }

  /// Canonical rational num/den with gcd(|num|, den) = 1 and den > 0.
  static Scalar canonicalize(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }

  static Scalar fp(std::int64_t v, std::uint64_t p) {
    FieldSpec f = FieldSpec::fp(p);
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return Scalar(Fp{static_cast<std::uint64_t>(r), f.p});
  }

  static Scalar of(std::int64_t v, FieldSpec f) {
    if (f.rational()) return rational(mpq_class(static_cast<long>(v)));
    return fp(v, f.p);
  }

  static Scalar of(const mpq_class& q, FieldSpec f) {
    if (f.rational()) return rational(q);
    // Reduce an exact rational into F_p; the denominator must be a unit.
    mpz_class num = q.get_num() % static_cast<long>(f.p);
    mpz_class den = q.get_den() % static_cast<long>(f.p);
    std::int64_t n = num.get_si();
    std::int64_t d = den.get_si();
    if (d == 0) throw std::domain_error("rational denominator vanishes mod p");
    if (n < 0) n += static_cast<std::int64_t>(f.p);
    std::uint64_t inv = detail::mod_inverse(static_cast<std::uint64_t>(d), f.p);
    return Scalar(Fp{static_cast<std::uint64_t>(n) * inv % f.p, f.p});
  }

  static Scalar zero(FieldSpec f) { return of(0, f); }
  static Scalar one(FieldSpec f) { return of(1, f); }

  FieldSpec field() const {
    if (auto* e = std::get_if<Fp>(&rep_)) return FieldSpec{e->p};
    return FieldSpec::q();
  }

  bool is_zero() const {
    if (auto* e = std::get_if<Fp>(&rep_)) return e->v == 0;
    return std::get<mpq_class>(rep_) == 0;
  }

  bool is_one() const {
    if (auto* e = std::get_if<Fp>(&rep_)) return e->v == 1 % e->p;
    return std::get<mpq_class>(rep_) == 1;
  }

  const mpq_class& rational_value() const {
    if (!std::holds_alternative<mpq_class>(rep_))
      throw std::logic_error("scalar is not rational");
    return std::get<mpq_class>(rep_);
  }

  std::uint64_t residue() const {
    if (auto* e = std::get_if<Fp>(&rep_)) return e->v;
    throw std::logic_error("scalar is not in a prime field");
  }

  Scalar operator-() const {
    if (auto* e = std::get_if<Fp>(&rep_))
      return Scalar(Fp{e->v == 0 ? 0 : e->p - e->v, e->p});
    return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
  }

  Scalar operator+(const Scalar& o) const {
    if (auto* a = std::get_if<Fp>(&rep_)) {
      const Fp& b = o.expect_fp(a->p);
      std::uint64_t s = a->v + b.v;
      if (s >= a->p) s -= a->p;
      return Scalar(Fp{s, a->p});
    }
    return Scalar(mpq_class(std::get<mpq_class>(rep_) + o.expect_q()));
  }

  Scalar operator-(const Scalar& o) const { return *this + (-o); }

  Scalar operator*(const Scalar& o) const {
    if (auto* a = std::get_if<Fp>(&rep_)) {
      const Fp& b = o.expect_fp(a->p);
      return Scalar(Fp{a->v * b.v % a->p, a->p});
    }
    return Scalar(mpq_class(std::get<mpq_class>(rep_) * o.expect_q()));
  }

  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  /// Multiplicative inverse; zero input is a division-by-zero error.
  Scalar inverse() const {
    if (auto* e = std::get_if<Fp>(&rep_))
      return Scalar(Fp{detail::mod_inverse(e->v, e->p), e->p});
    const mpq_class& q = std::get<mpq_class>(rep_);
    if (q == 0) throw std::domain_error("division by zero");
    mpq_class r(q.get_den(), q.get_num());
    r.canonicalize();
    return Scalar(std::move(r));
  }

  bool operator==(const Scalar& o) const {
    if (auto* a = std::get_if<Fp>(&rep_)) {
      const Fp& b = o.expect_fp(a->p);
      return a->v == b.v;
    }
    return std::get<mpq_class>(rep_) == o.expect_q();
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const {
    if (auto* e = std::get_if<Fp>(&rep_)) return std::to_string(e->v);
    return std::get<mpq_class>(rep_).get_str();
  }

 private:
  struct Fp {
    std::uint64_t v;
    std::uint64_t p;
  };

  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
  explicit Scalar(Fp e) : rep_(e) {}

  const Fp& expect_fp(std::uint64_t p) const {
    auto* e = std::get_if<Fp>(&rep_);
    if (!e || e->p != p)
      throw std::invalid_argument("scalar arithmetic across different fields");
    return *e;
  }

  const mpq_class& expect_q() const {
    auto* q = std::get_if<mpq_class>(&rep_);
    if (!q) throw std::invalid_argument("scalar arithmetic across different fields");
    return *q;
  }

  std::variant<mpq_class, Fp> rep_;
};

inline Scalar field_inverse(const Scalar& a) { return a.inverse(); }

}  // namespace minkhad
