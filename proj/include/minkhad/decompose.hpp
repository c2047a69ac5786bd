#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "minkhad/matrix.hpp"

namespace minkhad {

/// target = factors[0] * ... * factors[s-1] entrywise, every factor of rank
/// at most rank_cap.
struct HadamardDecomposition {
  Matrix target;
  std::vector<Matrix> factors;
  std::size_t rank_cap;
};

inline Matrix hadamard_product(const std::vector<Matrix>& ms) {
  if (ms.empty()) throw std::invalid_argument("empty Hadamard product");
  Matrix r = ms[0];
  for (std::size_t i = 1; i < ms.size(); ++i) r = hadamard(r, ms[i]);
  return r;
}

/// Shared validator for every decomposition the library produces.
inline bool valid_decomposition(const HadamardDecomposition& d) {
  if (d.factors.empty()) return false;
  for (auto& f : d.factors)
    if (rank(f) > d.rank_cap) return false;
  return hadamard_product(d.factors) == d.target;
}

/// Block decomposition: ceil(min(m,n)/(r-1)) factors, factor k carrying a
/// band of r-1 rows of M (columns when n < m) and all-ones elsewhere.
inline HadamardDecomposition decompose_blocks(const Matrix& m, std::size_t r) {
  if (r < 2) throw std::invalid_argument("decompose_blocks: rank cap must be at least 2");
  if (m.cols() < m.rows()) {
    HadamardDecomposition t = decompose_blocks(m.transpose(), r);
    HadamardDecomposition out{m, {}, r};
    for (auto& f : t.factors) out.factors.push_back(f.transpose());
    return out;
  }
  std::size_t rows = m.rows();
  std::size_t band = r - 1;
  std::size_t count = (rows + band - 1) / band;
  HadamardDecomposition out{m, {}, r};
  for (std::size_t k = 0; k < count; ++k) {
    Matrix f = Matrix::ones(m.rows(), m.cols(), m.field());
    std::size_t lo = k * band;
    std::size_t hi = std::min(lo + band, rows);
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) f.at(i, j) = m.at(i, j);
    out.factors.push_back(std::move(f));
  }
  return out;
}

/// Two rank-<=2 factors of a 3xn matrix. A full-rank input is split using a
/// combination of the first two rows patched on shared zero columns; rank
/// <=2 inputs come back as the single factor (M).
inline HadamardDecomposition decompose_two_factors_3xn(const Matrix& m) {
  if (m.rows() != 3) throw std::invalid_argument("decompose_two_factors_3xn: 3 rows required");
  if (rank(m) <= 2) return HadamardDecomposition{m, {m}, 2};

  std::size_t n = m.cols();
  FieldSpec f = m.field();
  Scalar one = Scalar::one(f), zero = Scalar::zero(f);

  // Patched first two rows and the shared-zero-column mask.
  std::vector<Scalar> v1(n, zero), v2(n, zero), u(n, zero);
  for (std::size_t j = 0; j < n; ++j) {
    bool both_zero = m.at(0, j).is_zero() && m.at(1, j).is_zero();
    v1[j] = both_zero ? one : m.at(0, j);
    v2[j] = both_zero ? one : m.at(1, j);
    u[j] = both_zero ? zero : one;
  }

  // lambda = 1; scan mu = 0, 1, 2, ... past the <= n values that zero an
  // entry of v1 + mu*v2.
  Scalar mu = zero;
  for (std::uint64_t step = 0;; ++step) {
    mu = Scalar::of(static_cast<std::int64_t>(step), f);
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      if ((v1[j] + mu * v2[j]).is_zero()) ok = false;
    if (ok) break;
  }

  Matrix a(3, n, f), b(3, n, f);
  for (std::size_t j = 0; j < n; ++j) {
    Scalar mix = v1[j] + mu * v2[j];
    a.at(0, j) = v1[j];
    a.at(1, j) = v2[j];
    a.at(2, j) = mix;
    b.at(0, j) = u[j];
    b.at(1, j) = u[j];
    b.at(2, j) = m.at(2, j) / mix;
  }
  return HadamardDecomposition{m, {std::move(a), std::move(b)}, 2};
}

/// Lower/upper bounds on the generic r-th Hadamard rank, with the exact
/// value 2 where it is known.
struct HrankBounds {
  int lower;
  int upper;
  std::optional<int> exact;
};

inline HrankBounds hrank_bounds(std::size_t m, std::size_t n, std::size_t r) {
  std::size_t mn = std::min(m, n);
  if (r < 2 || r > mn) throw std::invalid_argument("hrank_bounds: need 2 <= r <= min(m,n)");
  int lower = 0;
  for (std::size_t acc = 1; acc < mn; acc *= r) ++lower;  // ceil(log_r(min))
  if (lower == 0) lower = 1;
  int upper = static_cast<int>((mn + r - 2) / (r - 1));
  std::optional<int> exact;
  if (r == mn - 1 || (mn + 2 < 2 * r && r < mn)) exact = 2;
  return HrankBounds{lower, upper, exact};
}

/// A different valid decomposition of the same target: rank-1 all-nonzero
/// twists on the first s-1 factors, their Hadamard inverse folded into the
/// last.
inline HadamardDecomposition scramble(const HadamardDecomposition& d, std::uint64_t seed) {
  if (d.factors.size() < 2)
    throw std::invalid_argument("scramble: at least two factors required");
  Rng rng(mix_seed(seed, 0xdecaf));
  FieldSpec f = d.target.field();
  std::size_t rows = d.target.rows(), cols = d.target.cols();

  auto rank1_nonzero = [&]() {
    Matrix u = random_matrix(rows, 1, f, rng, /*nonzero=*/true, 1, 9);
    Matrix v = random_matrix(1, cols, f, rng, /*nonzero=*/true, 1, 9);
    return u * v;
  };

  HadamardDecomposition out{d.target, {}, d.rank_cap};
  Matrix twist = Matrix::ones(rows, cols, f);
  for (std::size_t k = 0; k + 1 < d.factors.size(); ++k) {
    Matrix r = rank1_nonzero();
    twist = hadamard(twist, r);
    out.factors.push_back(hadamard(r, d.factors[k]));
  }
  out.factors.push_back(hadamard(hadamard_inverse(twist), d.factors.back()));
  return out;
}

}  // namespace minkhad
