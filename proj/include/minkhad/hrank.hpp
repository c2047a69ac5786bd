#pragma once

#include <future>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "minkhad/decompose.hpp"
#include "minkhad/matrix.hpp"

namespace minkhad {

/// Smooth point A = U V^T of the variety of m x n matrices of rank <= r.
struct RankVarietyPoint {
  Matrix u;  // m x r
  Matrix v;  // n x r
  Matrix a;  // m x n, rank exactly r
};

/// Seeded random smooth point; resamples (bounded) until rank(A) = r.
inline RankVarietyPoint random_point(std::size_t m, std::size_t n, std::size_t r,
                                     std::uint64_t seed, FieldSpec field) {
  if (r == 0 || r > std::min(m, n))
    throw std::invalid_argument("random_point: need 1 <= r <= min(m,n)");
  Rng rng(mix_seed(seed, 0x9d7));
  for (int tries = 0; tries < 100; ++tries) {
    bool nonzero = !field.rational();
    Matrix u = random_matrix(m, r, field, rng, nonzero);
    Matrix v = random_matrix(n, r, field, rng, nonzero);
    Matrix a = u * v.transpose();
    if (rank(a) == r) return RankVarietyPoint{std::move(u), std::move(v), std::move(a)};
  }
  throw std::runtime_error("random_point: failed to hit rank r");
}

/// Spanning set of the tangent space at A = U V^T, flattened row-major:
/// the r*n matrices u_i e_j^T followed by the m*r matrices e_i v_j^T.
inline std::vector<std::vector<Scalar>> tangent_basis(const RankVarietyPoint& p) {
  std::size_t m = p.a.rows(), n = p.a.cols(), r = p.u.cols();
  FieldSpec f = p.a.field();
  std::vector<std::vector<Scalar>> out;
  out.reserve(r * n + m * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> t(m * n, Scalar::zero(f));
      for (std::size_t a = 0; a < m; ++a) t[a * n + j] = p.u.at(a, i);
      out.push_back(std::move(t));
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<Scalar> t(m * n, Scalar::zero(f));
      for (std::size_t b = 0; b < n; ++b) t[i * n + b] = p.v.at(b, j);
      out.push_back(std::move(t));
    }
  return out;
}

/// Rank of the tangent space to the s-th Hadamard power of the rank-<=r
/// variety at the product of s seeded random points (Terracini).
inline std::size_t power_tangent_rank(std::size_t m, std::size_t n, std::size_t r, std::size_t s,
                                      std::uint64_t seed, FieldSpec field) {
  if (s == 0) throw std::invalid_argument("power_tangent_rank: s must be positive");
  std::vector<RankVarietyPoint> pts;
  pts.reserve(s);
  for (std::size_t k = 0; k < s; ++k)
    pts.push_back(random_point(m, n, r, mix_seed(seed, k), field));

  std::vector<std::vector<Scalar>> rows;
  for (std::size_t k = 0; k < s; ++k) {
    // B_k = Hadamard product of the other points.
    Matrix bk = Matrix::ones(m, n, field);
    for (std::size_t l = 0; l < s; ++l)
      if (l != k) bk = hadamard(bk, pts[l].a);
    for (auto& t : tangent_basis(pts[k])) {
      std::vector<Scalar> row = t;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) row[i * n + j] *= bk.at(i, j);
      rows.push_back(std::move(row));
    }
  }

  Matrix stacked(rows.size(), m * n, field);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m * n; ++j) stacked.at(i, j) = rows[i][j];
  return rank(std::move(stacked));
}

/// Expected projective dimension of the s-th Hadamard power of the rank-<=r
/// variety: min{s*r(m+n-r) - (s-1)(m+n-1), mn} - 1.
inline long long expected_dim(std::size_t m, std::size_t n, std::size_t r, std::size_t s) {
  long long M = static_cast<long long>(m), N = static_cast<long long>(n),
            R = static_cast<long long>(r), S = static_cast<long long>(s);
  long long cand = S * R * (M + N - R) - (S - 1) * (M + N - 1);
  return std::min(cand, M * N) - 1;
}

/// Conjectured generic rank from the dimension count:
/// ceil((mn - (m+n-1)) / (r(m+n-r) - m - n + 1)).
inline int expected_generic_rank(std::size_t m, std::size_t n, std::size_t r) {
  long long M = static_cast<long long>(m), N = static_cast<long long>(n),
            R = static_cast<long long>(r);
  long long den = R * (M + N - R) - M - N + 1;
  if (den <= 0)
    throw std::invalid_argument("expected_generic_rank: no growth per factor for this r");
  long long num = M * N - (M + N - 1);
  if (num <= 0) return 1;
  return static_cast<int>((num + den - 1) / den);
}

/// Smallest s whose s-th Hadamard power has a full tangent space at a
/// generic point (maximum over trials). Exact for r >= min(m,n); otherwise
/// a Monte Carlo certificate of the generic value.
inline int generic_rank(std::size_t m, std::size_t n, std::size_t r, std::size_t trials,
                        std::uint64_t seed, FieldSpec field) {
  if (trials == 0) throw std::invalid_argument("generic_rank: need at least one trial");
  if (r >= std::min(m, n)) return 1;
  HrankBounds b = hrank_bounds(m, n, r);
  for (int s = b.lower; s < b.upper; ++s) {
    std::size_t best = 0;
    for (std::size_t t = 0; t < trials; ++t)
      best = std::max(best, power_tangent_rank(m, n, r, static_cast<std::size_t>(s),
                                               mix_seed(seed, 1000 * s + t), field));
    if (best == m * n) return s;
  }
  // The block decomposition shows the upper bound is always attained.
  return b.upper;
}

struct RankTableRow {
  std::size_t n;
  std::size_t r;
  int computed;
  int expected;
  int lower;
  int upper;
};

/// Generic Hadamard ranks of n x n matrices for 2 <= r < (n+2)/2, rows
/// computed concurrently but reported in deterministic order.
inline std::vector<RankTableRow> rank_table(std::size_t n_lo, std::size_t n_hi,
                                            std::size_t trials, std::uint64_t seed,
                                            FieldSpec field) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t n = n_lo; n <= n_hi; ++n)
    for (std::size_t r = 2; 2 * r < n + 2; ++r) cells.push_back({n, r});

  std::vector<std::future<RankTableRow>> jobs;
  jobs.reserve(cells.size());
  for (auto [n, r] : cells)
    jobs.push_back(std::async(std::launch::async, [n = n, r = r, trials, seed, field]() {
      HrankBounds b = hrank_bounds(n, n, r);
      return RankTableRow{n, r,
                          generic_rank(n, n, r, trials, mix_seed(seed, n * 64 + r), field),
                          expected_generic_rank(n, n, r), b.lower, b.upper};
    }));

  std::vector<RankTableRow> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

inline std::string rank_table_text(const std::vector<RankTableRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "n" << std::setw(6) << "r" << std::setw(10) << "computed"
     << std::setw(10) << "expected" << std::setw(7) << "lower" << std::setw(7) << "upper"
     << "\n";
  for (auto& r : rows)
    os << std::left << std::setw(6) << r.n << std::setw(6) << r.r << std::setw(10) << r.computed
       << std::setw(10) << r.expected << std::setw(7) << r.lower << std::setw(7) << r.upper
       << "\n";
  return os.str();
}

inline std::string rank_table_csv(const std::vector<RankTableRow>& rows) {
  std::ostringstream os;
  os << "n,r,computed,expected,lower,upper\n";
  for (auto& r : rows)
    os << r.n << "," << r.r << "," << r.computed << "," << r.expected << "," << r.lower << ","
       << r.upper << "\n";
  return os.str();
}

}  // namespace minkhad
