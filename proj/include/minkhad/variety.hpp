#pragma once

#include <string>
#include <vector>

#include "minkhad/hilbert.hpp"
#include "minkhad/matrix.hpp"
#include "minkhad/rng.hpp"

namespace minkhad {

/// A variety presented by an ideal, with ambient metadata. Affine ideals
/// live in n variables, projective ones in n+1 homogeneous coordinates.
struct VarietyIdeal {
  Space space = Space::affine;
  std::size_t ambient = 0;
  RingPtr ring;
  std::vector<Polynomial> gens;

  static VarietyIdeal affine(std::size_t n, RingPtr ring, std::vector<Polynomial> gens) {
    if (ring->nvars() != n) throw std::invalid_argument("affine ring must have n variables");
    return VarietyIdeal{Space::affine, n, std::move(ring), std::move(gens)};
  }

  static VarietyIdeal projective(std::size_t n, RingPtr ring, std::vector<Polynomial> gens) {
    if (ring->nvars() != n + 1)
      throw std::invalid_argument("projective ring must have n+1 variables");
    for (auto& g : gens)
      if (!g.is_homogeneous())
        throw std::invalid_argument("projective ideal requires homogeneous generators");
    return VarietyIdeal{Space::projective, n, std::move(ring), std::move(gens)};
  }

  FieldSpec field() const { return ring->field; }
};

inline int dimension(const VarietyIdeal& v) {
  return ideal_dimension(v.gens, v.space, v.ring->nvars());
}

inline long long degree(const VarietyIdeal& v) {
  return ideal_degree(v.gens, v.space);
}

/// Projective variety defined by a homogeneous ideal is empty iff the
/// affine cone is at most the origin.
inline bool is_empty_projective(const VarietyIdeal& v) {
  if (v.space != Space::projective)
    throw std::invalid_argument("emptiness test is for projective ideals");
  return dimension(v) < 0;
}

namespace detail {

/// Reindex a polynomial into a larger ring, its variables shifted by offset.
inline Polynomial embed(const Polynomial& p, const RingPtr& big, std::size_t offset,
                        MonomialOrder order) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (auto& t : p.terms()) {
    std::vector<std::uint32_t> e(big->nvars(), 0);
    for (std::size_t i = 0; i < p.ring()->nvars(); ++i) e[offset + i] = t.m[i];
    terms.push_back(Term{t.c, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(big, order, std::move(terms));
}

/// Copy a polynomial into a ring with the same shape but different names.
inline Polynomial rename(const Polynomial& p, const RingPtr& target) {
  if (target->nvars() != p.ring()->nvars() || !(target->field == p.ring()->field))
    throw std::invalid_argument("rename: incompatible rings");
  std::vector<Term> terms(p.terms().begin(), p.terms().end());
  return Polynomial::from_terms(target, p.order(), std::move(terms));
}

inline RingPtr graph_ring(std::size_t block, FieldSpec field, bool projective) {
  std::vector<std::string> names;
  long lo = projective ? 0 : 1;
  for (auto stem : {"u", "v", "z"})
    for (long i = lo; i < lo + static_cast<long>(block); ++i)
      names.push_back(std::string(stem) + std::to_string(i));
  return Ring::make(std::move(names), field);
}

enum class GraphMap { sum, product };

/// Closure of the image of X x Y under entrywise sum or product, computed
/// by eliminating the source blocks of the graph ideal.
inline std::vector<Polynomial> graph_eliminate(const VarietyIdeal& x, const VarietyIdeal& y,
                                               GraphMap map) {
  if (x.ambient != y.ambient || !(x.field() == y.field()))
    throw std::invalid_argument("operands live in different ambient spaces or fields");
  std::size_t block = x.ring->nvars();
  RingPtr big = graph_ring(block, x.field(), x.space == Space::projective);
  MonomialOrder order = MonomialOrder::Elim(2 * block);
  std::vector<Polynomial> gens;
  for (auto& g : x.gens) gens.push_back(embed(g, big, 0, order));
  for (auto& g : y.gens) gens.push_back(embed(g, big, block, order));
  for (std::size_t i = 0; i < block; ++i) {
    Polynomial xi = Polynomial::variable(big, order, i);
    Polynomial yi = Polynomial::variable(big, order, block + i);
    Polynomial zi = Polynomial::variable(big, order, 2 * block + i);
    gens.push_back(map == GraphMap::sum ? zi - xi - yi : zi - xi * yi);
  }
  return eliminate(gens, 2 * block);
}

}  // namespace detail

/// Closure of {p + q : p in X, q in Y} for affine X, Y.
inline VarietyIdeal minkowski_sum(const VarietyIdeal& x, const VarietyIdeal& y) {
  if (x.space != Space::affine || y.space != Space::affine)
    throw std::invalid_argument(
        "minkowski_sum: entry-wise sum is not well-defined over projective spaces");
  std::vector<Polynomial> gens = detail::graph_eliminate(x, y, detail::GraphMap::sum);
  RingPtr ring = gens.empty() ? Ring::affine(x.ambient, x.field(), "z") : gens[0].ring();
  return VarietyIdeal{Space::affine, x.ambient, ring, std::move(gens)};
}

/// Closure of the coordinatewise-product image of two affine varieties.
inline VarietyIdeal hadamard_affine(const VarietyIdeal& x, const VarietyIdeal& y) {
  if (x.space != Space::affine || y.space != Space::affine)
    throw std::invalid_argument("hadamard_affine: affine operands required");
  std::vector<Polynomial> gens = detail::graph_eliminate(x, y, detail::GraphMap::product);
  RingPtr ring = gens.empty() ? Ring::affine(x.ambient, x.field(), "z") : gens[0].ring();
  return VarietyIdeal{Space::affine, x.ambient, ring, std::move(gens)};
}

/// Hadamard product of projective varieties, computed on affine cones.
/// Points where the product is undefined map to the cone origin, which is
/// irrelevant projectively; no saturation step.
inline VarietyIdeal hadamard_projective(const VarietyIdeal& x, const VarietyIdeal& y) {
  if (x.space != Space::projective || y.space != Space::projective)
    throw std::invalid_argument("hadamard_projective: projective operands required");
  std::vector<Polynomial> gens = detail::graph_eliminate(x, y, detail::GraphMap::product);
  RingPtr ring = gens.empty() ? Ring::projective(x.ambient, x.field(), "z") : gens[0].ring();
  return VarietyIdeal{Space::projective, x.ambient, ring, std::move(gens)};
}

/// Join J(X, Y): the Minkowski sum of the affine cones.
inline VarietyIdeal join(const VarietyIdeal& x, const VarietyIdeal& y) {
  if (x.space != Space::projective || y.space != Space::projective)
    throw std::invalid_argument("join: projective operands required");
  std::vector<Polynomial> gens = detail::graph_eliminate(x, y, detail::GraphMap::sum);
  RingPtr ring = gens.empty() ? Ring::projective(x.ambient, x.field(), "z") : gens[0].ring();
  return VarietyIdeal{Space::projective, x.ambient, ring, std::move(gens)};
}

/// Ideal of the all-ones point [1:...:1] in P^n.
inline VarietyIdeal all_ones_point(std::size_t n, FieldSpec field) {
  RingPtr ring = Ring::projective(n, field, "z");
  MonomialOrder order = MonomialOrder::Grevlex();
  std::vector<Polynomial> gens;
  for (std::size_t i = 1; i <= n; ++i)
    gens.push_back(Polynomial::variable(ring, order, 0) - Polynomial::variable(ring, order, i));
  return VarietyIdeal{Space::projective, n, ring, buchberger(gens, order).elements};
}

/// s-th Hadamard power; s = 0 is the all-ones point by convention.
inline VarietyIdeal hadamard_power(const VarietyIdeal& v, std::size_t s) {
  if (v.space != Space::projective)
    throw std::invalid_argument("hadamard_power: projective input required");
  if (s == 0) return all_ones_point(v.ambient, v.field());
  VarietyIdeal acc = v;
  for (std::size_t i = 1; i < s; ++i) acc = hadamard_projective(acc, v);
  return acc;
}

/// Homogenization of every element of a grevlex reduced basis; the standard
/// projective-closure computation. The new coordinate x0 comes first.
inline VarietyIdeal projective_closure(const VarietyIdeal& v) {
  if (v.space != Space::affine)
    throw std::invalid_argument("projective_closure: affine input required");
  GroebnerBasis gb = buchberger(v.gens, MonomialOrder::Grevlex());
  std::vector<std::string> names{"x0"};
  for (auto& nm : v.ring->names) names.push_back(nm);
  RingPtr target = Ring::make(std::move(names), v.field());
  std::vector<Polynomial> gens;
  for (auto& g : gb.elements)
    gens.push_back(g.homogenize(target, MonomialOrder::Grevlex(), 0));
  return VarietyIdeal{Space::projective, v.ambient, target, std::move(gens)};
}

/// True iff the projective closures meet the hyperplane x0 = 0 in disjoint
/// sets, i.e. closure(X) + closure(Y) + <x0> cuts out the empty set.
inline bool disjoint_at_infinity(const VarietyIdeal& x, const VarietyIdeal& y) {
  if (x.space != Space::affine || y.space != Space::affine)
    throw std::invalid_argument("disjoint_at_infinity: affine operands required");
  if (x.ambient != y.ambient || !(x.field() == y.field()))
    throw std::invalid_argument("operands live in different ambient spaces or fields");
  VarietyIdeal cx = projective_closure(x);
  VarietyIdeal cy = projective_closure(y);
  std::vector<Polynomial> gens = cx.gens;
  for (auto& g : cy.gens) gens.push_back(detail::rename(g, cx.ring));
  gens.push_back(Polynomial::variable(cx.ring, MonomialOrder::Grevlex(), 0));
  return ideal_dimension(gens, Space::projective, cx.ring->nvars()) < 0;
}

/// Ideal of alpha * X: substitute x_i -> x_i / alpha.
inline VarietyIdeal dilate(const VarietyIdeal& v, const Scalar& alpha) {
  if (v.space != Space::affine) throw std::invalid_argument("dilate: affine input required");
  if (alpha.is_zero()) throw std::invalid_argument("dilate: alpha must be nonzero");
  Scalar inv = alpha.inverse();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < v.ring->nvars(); ++i)
    images.push_back(Polynomial::variable(v.ring, MonomialOrder::Grevlex(), i) * inv);
  std::vector<Polynomial> gens;
  for (auto& g : v.gens) gens.push_back(g.with_order(MonomialOrder::Grevlex()).substitute(images));
  return VarietyIdeal{Space::affine, v.ambient, v.ring, std::move(gens)};
}

/// Ideal of gX for a seeded pseudorandom g in GL_n, realized by substituting
/// with g^{-1}. Fixed seed gives a deterministic output.
inline VarietyIdeal random_linear_transform(const VarietyIdeal& v, std::uint64_t seed) {
  if (v.space != Space::affine)
    throw std::invalid_argument("random_linear_transform: affine input required");
  std::size_t n = v.ring->nvars();
  Rng rng(mix_seed(seed, 0x91f));
  Matrix g(1, 1, v.field());
  for (;;) {
    g = random_matrix(n, n, v.field(), rng, /*nonzero=*/false, -9, 9);
    if (rank(g) == n) break;
  }
  Matrix ginv = inverse(g);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial im = Polynomial::zero(v.ring, MonomialOrder::Grevlex());
    for (std::size_t j = 0; j < n; ++j)
      im = im + Polynomial::variable(v.ring, MonomialOrder::Grevlex(), j) * ginv.at(i, j);
    images.push_back(im);
  }
  std::vector<Polynomial> gens;
  for (auto& f : v.gens) gens.push_back(f.with_order(MonomialOrder::Grevlex()).substitute(images));
  return VarietyIdeal{Space::affine, v.ambient, v.ring, std::move(gens)};
}

/// Cayley trick embedding: projective closures of X x {z0} and Y x {z1} in
/// P^{n+1} with coordinates x0, x1..xn, z.
inline std::pair<VarietyIdeal, VarietyIdeal> cayley_lift(const VarietyIdeal& x,
                                                         const VarietyIdeal& y,
                                                         const Scalar& z0, const Scalar& z1) {
  if (x.space != Space::affine || y.space != Space::affine)
    throw std::invalid_argument("cayley_lift: affine operands required");
  if (x.ambient != y.ambient || !(x.field() == y.field()))
    throw std::invalid_argument("operands live in different ambient spaces or fields");
  if (z0 == z1) throw std::invalid_argument("cayley_lift: levels z0 and z1 must differ");

  auto lift = [&](const VarietyIdeal& v, const Scalar& level) {
    std::vector<std::string> names = v.ring->names;
    names.push_back("z");
    RingPtr ext = Ring::make(std::move(names), v.field());
    MonomialOrder order = MonomialOrder::Grevlex();
    std::vector<Polynomial> gens;
    for (auto& g : v.gens) gens.push_back(detail::embed(g, ext, 0, order));
    gens.push_back(Polynomial::variable(ext, order, v.ambient) -
                   Polynomial::constant(ext, order, level));
    return projective_closure(VarietyIdeal{Space::affine, v.ambient + 1, ext, std::move(gens)});
  };
  return {lift(x, z0), lift(y, z1)};
}

/// Equality of the presented ideals (reduced bases coincide); variable
/// names are immaterial.
inline bool same_variety_ideal(const VarietyIdeal& a, const VarietyIdeal& b) {
  if (a.space != b.space || a.ambient != b.ambient || !(a.field() == b.field())) return false;
  std::vector<Polynomial> rhs;
  for (auto& g : b.gens) rhs.push_back(detail::rename(g, a.ring));
  return ideal_equal(a.gens.empty() && rhs.empty() ? std::vector<Polynomial>{} : a.gens, rhs);
}

}  // namespace minkhad
