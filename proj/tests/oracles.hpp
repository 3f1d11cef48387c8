#pragma once

// Reference computations for the tests. Nothing here calls into the library
// except for the plain value types; each routine is a direct restatement of
// the definition.

#include "latcover/lattice.hpp"

#include <gmpxx.h>

#include <optional>
#include <random>
#include <vector>

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;
using ZVec = std::vector<Z>;
using QVec = std::vector<Q>;

// Solves A x = b by fraction-exact elimination; nullopt when singular.
inline std::optional<QVec> solve(std::vector<QVec> a, QVec b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Q f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  QVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Weights mu with sum mu_i v_i = x and sum mu_i = 1.
inline std::optional<QVec> barycentric(const std::vector<ZVec>& v, const QVec& x) {
  const std::size_t m = v.size();
  std::vector<QVec> a(m, QVec(m));
  QVec b(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) a[r][c] = r + 1 < m ? Q(v[c][r]) : Q(1);
    b[r] = r + 1 < m ? x[r] : Q(1);
  }
  return solve(a, b);
}

inline bool inside(const std::vector<ZVec>& v, const QVec& x) {
  const auto mu = barycentric(v, x);
  if (!mu) return false;
  for (const auto& q : *mu)
    if (q < 0) return false;
  return true;
}

inline QVec combine(const std::vector<ZVec>& v, const QVec& lambda) {
  QVec x(v[0].size(), Q(0));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t c = 0; c < x.size(); ++c) x[c] += lambda[i] * v[i][c];
  return x;
}

inline Z edge_gcd(const ZVec& a, const ZVec& b) {
  Z g = 0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    const Z d = abs(b[c] - a[c]);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  }
  return g;
}

// Points at distance l - (l mod k) from u_i along each edge, then shifted by
// sum_j t_j (u_j - u_i) / l_ij.
inline std::vector<ZVec> apex_vertices(const std::vector<ZVec>& u, std::size_t i, const Z& k,
                                       const std::vector<Z>& t = {}) {
  const std::size_t n = u[0].size();
  ZVec shift(n, Z(0));
  std::vector<ZVec> out;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (j == i) {
      out.push_back(u[i]);
      continue;
    }
    const Z l = edge_gcd(u[i], u[j]);
    const Z r = l % k;
    ZVec w(n);
    for (std::size_t c = 0; c < n; ++c) {
      const Z dir = (u[j][c] - u[i][c]) / l;
      w[c] = u[i][c] + (l - r) * dir;
      if (!t.empty()) shift[c] += t[j] * dir;
    }
    out.push_back(w);
  }
  for (auto& w : out)
    for (std::size_t c = 0; c < n; ++c) w[c] += shift[c];
  return out;
}

// Box scan with barycentric membership.
inline std::vector<ZVec> box_points(const std::vector<ZVec>& v) {
  const std::size_t n = v[0].size();
  ZVec lo = v[0], hi = v[0];
  for (const auto& p : v)
    for (std::size_t c = 0; c < n; ++c) {
      if (p[c] < lo[c]) lo[c] = p[c];
      if (p[c] > hi[c]) hi[c] = p[c];
    }
  std::vector<ZVec> out;
  ZVec cur = lo;
  while (true) {
    QVec x(cur.begin(), cur.end());
    if (inside(v, x)) out.push_back(cur);
    std::size_t c = 0;
    while (c < n) {
      if (cur[c] < hi[c]) {
        ++cur[c];
        break;
      }
      cur[c] = lo[c];
      ++c;
    }
    if (c == n) break;
  }
  return out;
}

inline std::vector<ZVec> scale(const std::vector<ZVec>& v, long r) {
  auto out = v;
  for (auto& p : out)
    for (auto& c : p) c *= r;
  return out;
}

// Every point of (r+1)P is p + q with p in P, q in rP.
inline bool closed_at(const std::vector<ZVec>& v, long r) {
  const auto p1 = box_points(v);
  const auto target = box_points(scale(v, r + 1));
  for (const auto& x : target) {
    bool found = false;
    for (const auto& p : p1) {
      QVec q(x.size());
      for (std::size_t c = 0; c < x.size(); ++c) q[c] = Q(x[c] - p[c]);
      if (inside(scale(v, r), q)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// Random point of the simplex with denominators up to `den`.
inline QVec random_lambda(std::mt19937_64& rng, std::size_t parts, long den = 997) {
  std::uniform_int_distribution<long> d(0, den);
  std::vector<long> w(parts);
  long total = 0;
  while (total == 0) {
    total = 0;
    for (auto& x : w) total += (x = d(rng));
  }
  QVec out;
  for (long x : w) out.push_back(Q(x, total));
  for (auto& q : out) q.canonicalize();
  return out;
}

inline std::vector<ZVec> to_z(const std::vector<latcover::LatticeVector>& v) { return v; }

}  // namespace oracle
