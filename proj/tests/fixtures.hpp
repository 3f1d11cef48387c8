#pragma once

#include "latcover/strategy.hpp"

#include <initializer_list>
#include <numeric>
#include <random>

namespace fx {

using namespace latcover;

inline LatticeVector V(std::initializer_list<long> xs) {
  LatticeVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::vector<Rational> L(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<Rational> out;
  for (auto [p, q] : xs) out.push_back(make_rational(p, q));
  return out;
}

inline LatticeSimplex pentatope() {
  return LatticeSimplex({V({5, 0, 0, 0}), V({0, 60, 0, 0}), V({0, 0, 0, 0}), V({8, 24, 12, 0}), V({33, 24, 72, 60})});
}

inline std::vector<std::vector<long>> pentatope_lengths() {
  return {{0, 5, 5, 3, 4}, {5, 0, 60, 4, 3}, {5, 60, 0, 4, 3}, {3, 4, 4, 0, 5}, {4, 3, 3, 5, 0}};
}

inline std::vector<std::vector<LatticeVector>> pentatope_supplementary() {
  return {
      {V({2, 0, 0, 0}), V({2, 42, 3, 0}), V({8, 24, 12, 0}), V({26, 18, 54, 45}), V({5, 0, 0, 0})},
      {V({2, 0, 0, 0}), V({2, 3, 0, 0}), V({11, 33, 21, 12}), V({20, 27, 42, 33}), V({5, 0, 0, 0})},
      {V({2, 0, 0, 0}), V({2, 3, 0, 0}), V({8, 24, 12, 0}), V({14, 33, 30, 24}), V({5, 0, 0, 0})},
  };
}

inline Cover apex_cover(const LatticeSimplex& p, long k) {
  std::vector<Dilation> ds;
  for (std::size_t i = 0; i < p.num_vertices(); ++i) ds.push_back(build_apex_dilation(p, i, k));
  return Cover(p, std::move(ds));
}

inline Cover pentatope_full_cover() {
  const auto p = pentatope();
  auto c = apex_cover(p, 3);
  for (auto& v : pentatope_supplementary()) c.add(explicit_dilation(p, 3, v));
  return c;
}

inline EdgeLengthMatrix profile(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Integer>> m;
  for (const auto& r : rows) {
    std::vector<Integer> row;
    for (long x : r) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return EdgeLengthMatrix(std::move(m));
}

inline std::vector<std::vector<long>> symmetric(std::size_t n, std::initializer_list<long> upper) {
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  auto it = upper.begin();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m[i][j] = m[j][i] = *it++;
  return m;
}

// Dimension-3 profiles: every edge of length 3, and a mixed one.
inline std::vector<std::vector<long>> all_threes_lengths() { return symmetric(4, {3, 3, 3, 3, 3, 3}); }
inline std::vector<std::vector<long>> mixed_lengths() { return symmetric(4, {6, 15, 10, 3, 2, 5}); }

inline LatticeSimplex realize(const std::vector<std::vector<long>>& rows, std::uint64_t seed = 7) {
  auto p = realize_edge_profile(profile(rows), rows.size() - 1, 400, seed);
  if (!p) throw std::runtime_error("fixture profile not realized");
  return *p;
}

inline LatticeSimplex unit_simplex(std::size_t n, long s = 1) {
  std::vector<LatticeVector> v{LatticeVector(n, Integer(0))};
  for (std::size_t i = 0; i < n; ++i) {
    LatticeVector e(n, Integer(0));
    e[i] = s;
    v.push_back(e);
  }
  return LatticeSimplex(std::move(v));
}

// ---------------------------------------------------------------------------
// Randomized edge profiles steered toward the case analyses.

enum class Steer { Random, Dim3Special, AllNonNegative, CaseA, CaseB, CaseC };

inline long draw(std::mt19937_64& rng, std::initializer_list<long> xs) {
  std::uniform_int_distribution<std::size_t> d(0, xs.size() - 1);
  return *(xs.begin() + d(rng));
}

inline long draw_range(std::mt19937_64& rng, long lo, long hi, bool skip5 = false) {
  std::uniform_int_distribution<long> d(lo, hi);
  long x;
  do x = d(rng);
  while (skip5 && x == 5);
  return x;
}

// Profile with entries in [2,12] (dim 3) or [3,17] without 5 (dim 4), plus
// the steered entries; rejection-sampled until the triangle condition holds.
inline std::vector<std::vector<long>> random_profile(std::mt19937_64& rng, std::size_t dim, Steer steer) {
  const std::size_t n = dim + 1;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    std::vector<std::vector<bool>> fixed(n, std::vector<bool>(n, false));
    auto set = [&](std::size_t i, std::size_t j, long x) {
      m[i][j] = m[j][i] = x;
      fixed[i][j] = fixed[j][i] = true;
    };
    switch (steer) {
      case Steer::Dim3Special:
        set(0, 1, 3);
        set(0, 2, 3);
        set(0, 3, draw(rng, {3, 5, 7, 9, 11}));
        set(1, 2, draw(rng, {3, 6, 9, 12}));
        break;
      case Steer::AllNonNegative:  // entries come from the pool below
        break;
      case Steer::CaseA:
        for (std::size_t j = 1; j < n; ++j) set(0, j, draw(rng, {4, 8, 12, 16}));
        break;
      case Steer::CaseB:
        set(0, 1, draw(rng, {4, 8}));
        set(0, 2, draw(rng, {4, 8}));
        set(0, 3, draw(rng, {4, 8}));
        set(0, 4, draw(rng, {3, 7, 10, 11, 13, 14}));
        set(1, 2, draw(rng, {4, 8, 12, 16}));
        set(1, 3, draw(rng, {4, 8, 12, 16}));
        set(2, 3, draw(rng, {4, 8, 12, 16}));
        break;
      case Steer::CaseC:
        set(0, 1, draw(rng, {4, 8}));
        set(0, 2, draw(rng, {4, 8}));
        set(0, 3, 11);
        set(0, 4, draw(rng, {7, 11, 14, 17}));
        set(1, 2, draw(rng, {4, 8, 12, 16}));
        break;
      case Steer::Random:
        break;
    }
    // Free entries are drawn one at a time, each consistent with the
    // triangles already decided.
    auto consistent = [&]() {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = j + 1; k < n; ++k) {
            if (i == j || i == k || !m[i][j] || !m[i][k] || !m[j][k]) continue;
            if (m[j][k] % std::gcd(m[i][j], m[i][k]) != 0) return false;
          }
      return true;
    };
    if (!consistent()) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        if (fixed[i][j]) continue;
        ok = false;
        for (int tries = 0; tries < 60 && !ok; ++tries) {
          if (steer == Steer::AllNonNegative)
            m[i][j] = m[j][i] = draw(rng, {3, 6, 9, 12, 15, 7, 10, 13, 16});
          else
            m[i][j] = m[j][i] = dim == 3 ? draw_range(rng, 2, 12) : draw_range(rng, 3, 17, true);
          ok = consistent();
        }
      }
    if (ok && profile_gcd_consistent(profile(m))) return m;
  }
  throw std::runtime_error("no consistent profile found");
}

inline LatticeSimplex random_simplex(std::mt19937_64& rng, std::size_t dim, Steer steer) {
  while (true) {
    const auto m = random_profile(rng, dim, steer);
    if (auto p = realize_edge_profile(profile(m), dim, 200, rng())) return *p;
  }
}

}  // namespace fx
