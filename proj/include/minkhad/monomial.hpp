#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace minkhad {

/// A power product x1^e1 ... xn^en with cached total degree.
class Monomial {
 public:
  explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}

  explicit Monomial(std::vector<std::uint32_t> exps)
      : e_(std::move(exps)),
        deg_(std::accumulate(e_.begin(), e_.end(), std::uint32_t{0})) {}

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }

  static Monomial var(std::size_t nvars, std::size_t i, std::uint32_t k = 1) {
    Monomial m(nvars);
    m.e_.at(i) = k;
    m.deg_ = k;
    return m;
  }

  std::size_t nvars() const { return e_.size(); }
  std::uint32_t deg() const { return deg_; }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }
  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const {
    check(o);
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    r.deg_ += o.deg_;
    return r;
  }

  bool divides(const Monomial& o) const {
    check(o);
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  /// this / o; requires o.divides(*this).
  Monomial operator/(const Monomial& o) const {
    check(o);
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (o.e_[i] > e_[i]) throw std::invalid_argument("monomial division is not exact");
      r.e_[i] -= o.e_[i];
    }
    r.deg_ -= o.deg_;
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    check(o);
    Monomial r(*this);
    r.deg_ = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      r.e_[i] = std::max(e_[i], o.e_[i]);
      r.deg_ += r.e_[i];
    }
    return r;
  }

  bool coprime(const Monomial& o) const {
    check(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

 private:
  void check(const Monomial& o) const {
    if (e_.size() != o.e_.size())
      throw std::invalid_argument("monomials live in different rings");
  }

  std::vector<std::uint32_t> e_;
  std::uint32_t deg_;
};

enum class Cmp { less = -1, equal = 0, greater = 1 };

/// Term orders. Variable 0 is the largest (x1 > x2 > ... for affine rings,
/// x0 > x1 > ... for projective ones). elim(k) compares the first k
/// variables by grevlex and breaks ties by grevlex on the rest, so a
/// Groebner basis under it intersected with the tail subring generates the
/// elimination ideal.
struct MonomialOrder {
  enum class Kind { lex, grevlex, elim };

  Kind kind = Kind::grevlex;
  std::size_t block = 0;  // eliminated-block size, elim only

  static MonomialOrder Lex() { return {Kind::lex, 0}; }
  static MonomialOrder Grevlex() { return {Kind::grevlex, 0}; }
  static MonomialOrder Elim(std::size_t k) { return {Kind::elim, k}; }

  bool operator==(const MonomialOrder&) const = default;

  int compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars())
      throw std::invalid_argument("comparing monomials of different rings");
    switch (kind) {
      case Kind::lex:
        return lex_cmp(a, b, 0, a.nvars());
      case Kind::grevlex:
        return grevlex_cmp(a, b, 0, a.nvars());
      case Kind::elim: {
        if (block >= a.nvars())
          throw std::invalid_argument("elimination block covers the whole ring");
        int c = grevlex_cmp(a, b, 0, block);
        if (c) return c;
        return grevlex_cmp(a, b, block, a.nvars());
      }
    }
    return 0;
  }

  Cmp cmp(const Monomial& a, const Monomial& b) const {
    return static_cast<Cmp>(compare(a, b));
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  static int lex_cmp(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }

  static int grevlex_cmp(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
};

}  // namespace minkhad
