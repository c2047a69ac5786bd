#pragma once

#include <algorithm>
#include <vector>

#include "minkhad/groebner.hpp"

namespace minkhad {

enum class Space { affine, projective };

namespace detail {

using ZPoly = std::vector<long long>;  // coefficients of a polynomial in t

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline void zp_add_shifted(ZPoly& a, const ZPoly& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

inline void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// 1 - t^d
inline ZPoly zp_one_minus_power(std::uint32_t d) {
  ZPoly r(d + 1, 0);
  r[0] = 1;
  r[d] = -1;
  return r;
}

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!gens[j].divides(gens[i])) continue;
      redundant = gens[i] != gens[j] || j < i;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

inline ZPoly hilbert_numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  for (auto& m : gens)
    if (m.is_one()) return {};

  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && pairwise_coprime; ++j)
      if (!gens[i].coprime(gens[j])) pairwise_coprime = false;
  if (pairwise_coprime) {
    ZPoly r{1};
    for (auto& m : gens) r = zp_mul(r, zp_one_minus_power(m.deg()));
    return r;
  }

  // Pivot on the most shared variable; N(I) = N(I + (x)) + t * N(I : x).
  std::vector<std::size_t> count(nvars, 0);
  for (auto& m : gens)
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i]) ++count[i];
  std::size_t pivot = static_cast<std::size_t>(
      std::max_element(count.begin(), count.end()) - count.begin());

  std::vector<Monomial> plus{Monomial::var(nvars, pivot)};
  std::vector<Monomial> colon;
  for (auto& m : gens) {
    if (m[pivot] == 0) {
      plus.push_back(m);
      colon.push_back(m);
    } else {
      colon.push_back(m / Monomial::var(nvars, pivot));
    }
  }
  ZPoly r = hilbert_numerator_rec(std::move(plus), nvars);
  zp_add_shifted(r, hilbert_numerator_rec(std::move(colon), nvars), 1);
  zp_trim(r);
  return r;
}

}  // namespace detail

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of R/<gens> for a
/// monomial ideal in n variables.
inline std::vector<long long> hilbert_numerator(const std::vector<Monomial>& gens,
                                                std::size_t nvars) {
  return detail::hilbert_numerator_rec(gens, nvars);
}

/// Dimension and degree extracted from the Hilbert series of the leading
/// term ideal under grevlex. dimension is the Krull dimension of the affine
/// variety (affine) or cone dimension minus one (projective); -1 means empty.
struct HilbertData {
  std::vector<long long> numerator;
  int dimension = -1;
  long long degree = 0;
};

inline HilbertData hilbert_data(const std::vector<Polynomial>& gens, Space space) {
  HilbertData out;
  if (gens.empty()) return out;  // caller decides what an empty list means
  RingPtr ring = gens[0].ring();
  if (space == Space::projective)
    for (auto& g : gens)
      if (!g.is_homogeneous())
        throw std::invalid_argument("projective ideal with non-homogeneous generator");

  GroebnerBasis gb = buchberger(gens, MonomialOrder::Grevlex());
  std::size_t n = ring->nvars();
  if (gb.is_unit()) {
    out.numerator = {};
    out.dimension = -1;
    out.degree = 0;
    return out;
  }
  std::vector<Monomial> lead;
  lead.reserve(gb.elements.size());
  for (auto& g : gb.elements) lead.push_back(g.leading_monomial());
  out.numerator = hilbert_numerator(lead, n);

  // Factor N(t) = (1-t)^c Q(t); dim and degree come from c and Q(1).
  detail::ZPoly q = out.numerator;
  std::size_t c = 0;
  for (;;) {
    long long at_one = 0;
    for (auto v : q) at_one += v;
    if (at_one != 0) break;
    // divide by (1 - t): q / (1-t) via synthetic division
    detail::ZPoly d(q.size() ? q.size() - 1 : 0, 0);
    long long carry = 0;
    for (std::size_t i = 0; i + 1 < q.size() + 1 && i < d.size(); ++i) {
      d[i] = q[i] + carry;
      carry = d[i];
    }
    detail::zp_trim(d);
    q = std::move(d);
    ++c;
    if (q.empty()) break;
  }
  long long q1 = 0;
  for (auto v : q) q1 += v;

  int cone_dim = static_cast<int>(n) - static_cast<int>(c);
  if (space == Space::affine) {
    out.dimension = cone_dim;
    out.degree = q1;
  } else {
    out.dimension = cone_dim - 1;
    out.degree = out.dimension >= 0 ? q1 : 0;
  }
  return out;
}

inline int ideal_dimension(const std::vector<Polynomial>& gens, Space space, std::size_t nvars) {
  if (gens.empty())
    return space == Space::affine ? static_cast<int>(nvars) : static_cast<int>(nvars) - 1;
  return hilbert_data(gens, space).dimension;
}

inline long long ideal_degree(const std::vector<Polynomial>& gens, Space space) {
  if (gens.empty()) return 1;  // the whole space is a linear variety
  return hilbert_data(gens, space).degree;
}

}  // namespace minkhad
