#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "minkhad/polynomial.hpp"

namespace minkhad {

/// Reduced Groebner basis: monic elements, pairwise non-divisible leading
/// terms, no term divisible by another element's leading term, elements
/// sorted by decreasing leading monomial.
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;

  bool is_unit() const {
    return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
  }
  bool is_zero_ideal() const { return elements.empty(); }
};

/// Remainder of f on division by the elements of basis; no term of the
/// result is divisible by any leading term of the basis.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  for (auto& g : basis)
    if (!same_ring(g.ring(), f.ring()) || !(g.order() == f.order()))
      throw std::invalid_argument("normal_form: ring or order mismatch");
  Polynomial p = f;
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const Polynomial* red = nullptr;
    for (auto& g : basis) {
      if (!g.is_zero() && g.leading_monomial().divides(lt.m)) {
        red = &g;
        break;
      }
    }
    if (red) {
      Scalar c = lt.c / red->leading_coeff();
      Monomial m = lt.m / red->leading_monomial();
      p = p - red->scaled(c, m);
    } else {
      remainder.push_back(lt);
      p = p - Polynomial::from_terms(p.ring(), p.order(), {lt});
    }
  }
  return Polynomial::from_terms(f.ring(), f.order(), std::move(remainder));
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f.with_order(gb.order), gb.elements);
}

namespace detail {

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Scalar one = Scalar::one(f.ring()->field);
  return f.scaled(one / f.leading_coeff(), l / f.leading_monomial()) -
         g.scaled(one / g.leading_coeff(), l / g.leading_monomial());
}

struct PairKey {
  std::uint32_t deg;
  Monomial lcm;
  std::size_t i, j;
};

struct PairLess {
  MonomialOrder order;
  bool operator()(const PairKey& a, const PairKey& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = order.compare(a.lcm, b.lcm);
    if (c) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

/// Drop generators with divisible leading terms, tail-reduce, normalize.
inline std::vector<Polynomial> autoreduce(std::vector<Polynomial> g, MonomialOrder order) {
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!g[j].leading_monomial().divides(g[i].leading_monomial())) continue;
      if (g[i].leading_monomial() == g[j].leading_monomial())
        redundant = j < i;  // keep one representative
      else
        redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = normal_form(minimal[i], others);
    if (!r.is_zero()) out.push_back(r.monic());
  }
  std::sort(out.begin(), out.end(), [&order](const Polynomial& a, const Polynomial& b) {
    return order.greater(a.leading_monomial(), b.leading_monomial());
  });
  return out;
}

}  // namespace detail

/// Buchberger with the normal selection strategy (minimal lcm degree,
/// deterministic tie-break) and the coprimality and chain criteria. Returns
/// the unique reduced basis; the unit ideal yields {1}.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder order) {
  GroebnerBasis gb{order, {}};
  if (gens.empty()) return gb;
  RingPtr ring = gens[0].ring();
  std::vector<Polynomial> g;
  for (auto& f : gens) {
    if (!same_ring(f.ring(), ring))
      throw std::invalid_argument("buchberger: generators from different rings");
    Polynomial p = f.with_order(order);
    if (!p.is_zero()) g.push_back(p.monic());
  }
  auto unit = [&]() {
    gb.elements = {Polynomial::constant(ring, order, Scalar::one(ring->field))};
    return gb;
  };
  for (auto& p : g)
    if (p.is_constant()) return unit();
  if (g.empty()) return gb;

  detail::PairLess less{order};
  std::set<detail::PairKey, detail::PairLess> pairs(less);
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    Monomial l = g[i].leading_monomial().lcm(g[j].leading_monomial());
    pairs.insert(detail::PairKey{l.deg(), l, i, j});
    pending.insert({i, j});
  };
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) push_pair(i, j);

  while (!pairs.empty()) {
    detail::PairKey k = *pairs.begin();
    pairs.erase(pairs.begin());
    pending.erase({k.i, k.j});

    const Monomial& li = g[k.i].leading_monomial();
    const Monomial& lj = g[k.j].leading_monomial();
    if (li.coprime(lj)) continue;  // Buchberger's first criterion

    // Chain criterion: some other leading term divides the lcm and both
    // side pairs are already handled.
    bool skip = false;
    for (std::size_t t = 0; t < g.size() && !skip; ++t) {
      if (t == k.i || t == k.j) continue;
      if (!g[t].leading_monomial().divides(k.lcm)) continue;
      auto key = [&](std::size_t a, std::size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (!pending.count(key(k.i, t)) && !pending.count(key(k.j, t))) skip = true;
    }
    if (skip) continue;

    Polynomial r = normal_form(detail::s_polynomial(g[k.i], g[k.j]), g);
    if (r.is_zero()) continue;
    if (r.is_constant()) return unit();
    g.push_back(r.monic());
    for (std::size_t i = 0; i + 1 < g.size(); ++i) push_pair(i, g.size() - 1);
  }

  gb.elements = detail::autoreduce(std::move(g), order);
  return gb;
}

/// Generators (a reduced basis) of <gens> intersected with the subring on
/// the variables after the first k, re-indexed into that smaller ring.
inline std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, std::size_t k) {
  if (gens.empty()) return {};
  RingPtr ring = gens[0].ring();
  if (k >= ring->nvars())
    throw std::invalid_argument("eliminate: block must leave at least one variable");
  MonomialOrder elim = k == 0 ? MonomialOrder::Grevlex() : MonomialOrder::Elim(k);
  GroebnerBasis gb = buchberger(gens, elim);

  RingPtr small = Ring::make(
      std::vector<std::string>(ring->names.begin() + static_cast<std::ptrdiff_t>(k),
                               ring->names.end()),
      ring->field);
  std::vector<Polynomial> out;
  for (auto& e : gb.elements) {
    bool in_subring = true;
    for (auto& t : e.terms())
      for (std::size_t i = 0; i < k && in_subring; ++i)
        if (t.m[i]) in_subring = false;
    if (!in_subring) continue;
    std::vector<Term> terms;
    terms.reserve(e.size());
    for (auto& t : e.terms()) {
      std::vector<std::uint32_t> exps(t.m.exponents().begin() + static_cast<std::ptrdiff_t>(k),
                                      t.m.exponents().end());
      terms.push_back(Term{t.c, Monomial(std::move(exps))});
    }
    out.push_back(Polynomial::from_terms(small, MonomialOrder::Grevlex(), std::move(terms)));
  }
  return out;
}

/// True iff the two generating sets present the same ideal (reduced bases
/// under the given order coincide).
inline bool ideal_equal(const std::vector<Polynomial>& lhs, const std::vector<Polynomial>& rhs,
                        MonomialOrder order = MonomialOrder::Grevlex()) {
  GroebnerBasis a = buchberger(lhs, order);
  GroebnerBasis b = buchberger(rhs, order);
  if (a.elements.size() != b.elements.size()) return false;
  for (std::size_t i = 0; i < a.elements.size(); ++i)
    if (a.elements[i] != b.elements[i]) return false;
  return true;
}

}  // namespace minkhad
