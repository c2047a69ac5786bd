#pragma once

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "minkhad/monomial.hpp"
#include "minkhad/scalar.hpp"

namespace minkhad {

/// Variable names plus the coefficient field. Polynomials hold a shared
/// pointer to their ring; two rings are compatible when they agree as values.
struct Ring {
  std::vector<std::string> names;
  FieldSpec field;

  std::size_t nvars() const { return names.size(); }
  bool operator==(const Ring&) const = default;

  static std::shared_ptr<const Ring> make(std::vector<std::string> names, FieldSpec f) {
    return std::make_shared<const Ring>(Ring{std::move(names), f});
  }

  /// x1..xn
  static std::shared_ptr<const Ring> affine(std::size_t n, FieldSpec f,
                                            const std::string& stem = "x") {
    std::vector<std::string> nm;
    nm.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) nm.push_back(stem + std::to_string(i));
    return make(std::move(nm), f);
  }

  /// x0..xn (ambient P^n, n+1 variables)
  static std::shared_ptr<const Ring> projective(std::size_t n, FieldSpec f,
                                                const std::string& stem = "x") {
    std::vector<std::string> nm;
    nm.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) nm.push_back(stem + std::to_string(i));
    return make(std::move(nm), f);
  }
};

using RingPtr = std::shared_ptr<const Ring>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

struct Term {
  Scalar c;
  Monomial m;
};

/// Sparse multivariate polynomial. Terms are strictly decreasing in the
/// active order; no zero coefficients, no repeated monomials. Immutable
/// after construction.
class Polynomial {
 public:
  Polynomial(RingPtr ring, MonomialOrder order)
      : ring_(std::move(ring)), order_(order) {}

  /// Normalizes: merges duplicate monomials, drops zeros, sorts.
  static Polynomial from_terms(RingPtr ring, MonomialOrder order, std::vector<Term> terms) {
    Polynomial p(std::move(ring), order);
    auto cmp = [&order](const Monomial& a, const Monomial& b) {
      return order.greater(a, b);
    };
    std::map<Monomial, Scalar, decltype(cmp)> acc(cmp);
    for (auto& t : terms) {
      if (t.m.nvars() != p.ring_->nvars())
        throw std::invalid_argument("term arity does not match ring");
      auto [it, fresh] = acc.emplace(std::move(t.m), t.c);
      if (!fresh) it->second += t.c;
    }
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.is_zero()) p.terms_.push_back(Term{c, m});
    return p;
  }

  static Polynomial zero(RingPtr ring, MonomialOrder order) {
    return Polynomial(std::move(ring), order);
  }

  static Polynomial constant(RingPtr ring, MonomialOrder order, Scalar c) {
    Polynomial p(ring, order);
    if (!c.is_zero()) p.terms_.push_back(Term{std::move(c), Monomial::one(ring->nvars())});
    return p;
  }

  static Polynomial variable(RingPtr ring, MonomialOrder order, std::size_t i) {
    Polynomial p(ring, order);
    p.terms_.push_back(Term{Scalar::one(ring->field), Monomial::var(ring->nvars(), i)});
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().m; }
  const Scalar& leading_coeff() const { return leading_term().c; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
  }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (auto& t : terms_) d = std::max(d, t.m.deg());
    return d;
  }

  bool is_homogeneous() const {
    for (auto& t : terms_)
      if (t.m.deg() != terms_[0].m.deg()) return false;
    return true;
  }

  Polynomial with_order(MonomialOrder order) const {
    if (order == order_) return *this;
    return from_terms(ring_, order, terms_);
  }

  Polynomial operator-() const {
    Polynomial r(ring_, order_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back(Term{-t.c, t.m});
    return r;
  }

  Polynomial operator+(const Polynomial& o) const {
    check_compat(o);
    Polynomial r(ring_, order_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      int c = order_.compare(terms_[i].m, o.terms_[j].m);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(o.terms_[j++]);
      } else {
        Scalar s = terms_[i].c + o.terms_[j].c;
        if (!s.is_zero()) r.terms_.push_back(Term{std::move(s), terms_[i].m});
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
  }

  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

  /// (c * m) * this, merged in one pass.
  Polynomial scaled(const Scalar& c, const Monomial& m) const {
    Polynomial r(ring_, order_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back(Term{t.c * c, t.m * m});
    return r;
  }

  Polynomial operator*(const Scalar& c) const { return scaled(c, Monomial::one(ring_->nvars())); }

  Polynomial operator*(const Polynomial& o) const {
    check_compat(o);
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (auto& a : terms_)
      for (auto& b : o.terms_) acc.push_back(Term{a.c * b.c, a.m * b.m});
    return from_terms(ring_, order_, std::move(acc));
  }

  Polynomial pow(std::uint32_t e) const {
    Polynomial r = constant(ring_, order_, Scalar::one(ring_->field));
    Polynomial b = *this;
    while (e) {
      if (e & 1) r = r * b;
      if (e >>= 1) b = b * b;
    }
    return r;
  }

  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return *this * leading_coeff().inverse();
  }

  /// Simultaneous substitution x_i -> images[i]; images live in a common
  /// target ring and the result is exact.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != ring_->nvars())
      throw std::invalid_argument("substitution arity mismatch");
    RingPtr target = images.empty() ? ring_ : images[0].ring();
    MonomialOrder torder = images.empty() ? order_ : images[0].order();
    for (auto& im : images)
      if (!same_ring(im.ring(), target))
        throw std::invalid_argument("substitution images live in different rings");
    Polynomial acc = zero(target, torder);
    for (auto& t : terms_) {
      Polynomial term = constant(target, torder, Scalar::of(0, target->field) + t.c);
      for (std::size_t i = 0; i < ring_->nvars(); ++i)
        if (t.m[i]) term = term * images[i].pow(t.m[i]);
      acc = acc + term;
    }
    return acc;
  }

  /// Inserts a homogenizing variable at position idx of the target ring and
  /// raises every term to the common total degree. Setting that variable to
  /// 1 restores the input.
  Polynomial homogenize(const RingPtr& target, MonomialOrder order, std::size_t idx) const {
    if (target->nvars() != ring_->nvars() + 1)
      throw std::invalid_argument("homogenization target must have one extra variable");
    std::uint32_t d = total_degree();
    Polynomial r(target, order);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      std::vector<std::uint32_t> e;
      e.reserve(target->nvars());
      for (std::size_t i = 0, j = 0; i < target->nvars(); ++i) {
        if (i == idx)
          e.push_back(d - t.m.deg());
        else
          e.push_back(t.m[j++]);
      }
      out.push_back(Term{t.c, Monomial(std::move(e))});
    }
    return from_terms(target, order, std::move(out));
  }

  /// Sets variable idx to 1 and removes it; input must be homogeneous.
  Polynomial dehomogenize(const RingPtr& target, MonomialOrder order, std::size_t idx) const {
    if (!is_homogeneous())
      throw std::invalid_argument("dehomogenizing a non-homogeneous polynomial");
    if (target->nvars() + 1 != ring_->nvars())
      throw std::invalid_argument("dehomogenization target must drop one variable");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      std::vector<std::uint32_t> e;
      e.reserve(target->nvars());
      for (std::size_t i = 0; i < ring_->nvars(); ++i)
        if (i != idx) e.push_back(t.m[i]);
      out.push_back(Term{t.c, Monomial(std::move(e))});
    }
    return from_terms(target, order, std::move(out));
  }

  bool operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    const Polynomial& rhs = (order_ == o.order_) ? o : o.with_order(order_);
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].m != rhs.terms_[i].m || terms_[i].c != rhs.terms_[i].c) return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Canonical text: terms in decreasing order, `^` for powers, `*` between
  /// factors, rational coefficients as p/q.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
      Scalar c = t.c;
      bool neg = false;
      if (c.field().rational() && c.rational_value() < 0) {
        neg = true;
        c = -c;
      }
      if (first) {
        if (neg) os << "-";
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      bool unit_coeff = c.is_one() && !t.m.is_one();
      if (!unit_coeff) os << c.str();
      bool printed = !unit_coeff;
      for (std::size_t i = 0; i < t.m.nvars(); ++i) {
        if (!t.m[i]) continue;
        if (printed) os << "*";
        os << ring_->names[i];
        if (t.m[i] > 1) os << "^" << t.m[i];
        printed = true;
      }
    }
    return os.str();
  }

  /// Debug validator for the sortedness/canonicality invariants.
  bool is_canonical() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].c.is_zero()) return false;
      if (i + 1 < terms_.size() && order_.compare(terms_[i].m, terms_[i + 1].m) <= 0)
        return false;
    }
    return true;
  }

 private:
  void check_compat(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_))
      throw std::invalid_argument("polynomial arithmetic across different rings");
    if (!(order_ == o.order_))
      throw std::invalid_argument("polynomial arithmetic across different term orders");
  }

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

inline Polynomial operator*(const Scalar& c, const Polynomial& p) { return p * c; }

}  // namespace minkhad
