#include "latcover/strategy.hpp"

#include "latcover/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace latcover {

std::string to_string(const CaseTag& tag) {
  auto list = [](const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  switch (tag.kind) {
    case CaseKind::AllNonNegative: return "AllNonNegative(" + tag.k.get_str() + ")";
    case CaseKind::Dim3Special: return "Dim3Special{relabeling=" + list(tag.relabeling) + ", S=" + list(tag.s) + "}";
    case CaseKind::CaseA: return "CaseA";
    case CaseKind::CaseB: return "CaseB{relabeling=" + list(tag.relabeling) + ", S=" + list(tag.s) + "}";
    case CaseKind::CaseC: return "CaseC{relabeling=" + list(tag.relabeling) + "}";
    case CaseKind::SupplementarySearch: return "SupplementarySearch{rounds=" + std::to_string(tag.rounds) + "}";
    case CaseKind::Unsupported: return "Unsupported{" + tag.reason + "}";
  }
  return "?";
}

Integer min_modulus(const Cover& cover) {
  Integer m = cover.dilations().front().modulus();
  for (const auto& d : cover.dilations()) m = std::min(m, d.modulus());
  return m;
}

namespace {

std::string format_lambda(const std::vector<Rational>& lambda) {
  std::string s = "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) s += (i ? ", " : "") + lambda[i].get_str();
  return s + ")";
}

// Apex dilation written in relabeled indices, built on the original simplex.
Dilation relabeled_apex(const LatticeSimplex& p, const std::vector<std::size_t>& perm, std::size_t i, long k,
                        const std::vector<Integer>& t = {}) {
  if (t.empty()) return build_apex_dilation(p, perm[i], Integer(k));
  const auto rel = full_translation(p.num_vertices(), i, t);
  std::vector<Integer> orig(p.num_vertices(), Integer(0));
  for (std::size_t j = 0; j < rel.size(); ++j) orig[perm[j]] = rel[j];
  if (!translation_valid(p, perm[i], Integer(k), orig))
    throw InternalError("translation vector rejected by translation_valid");
  return translate_dilation(p, perm[i], Integer(k), orig);
}

StrategyReport finish(const LatticeSimplex& p, CaseTag tag, std::vector<Dilation> ds, ACoefficients a,
                      long min_k) {
  const auto facets = facet_system(p);
  for (const auto& d : ds) {
    if (d.modulus() < min_k) throw InternalError("constructed dilation has modulus below " + std::to_string(min_k));
    for (const auto& v : d.vertices())
      if (!facets.contains(v)) throw InternalError("constructed dilation leaves the simplex");
  }
  Cover cover(p, std::move(ds));
  auto cert = certify(cover);
  if (!cert.covered)
    throw InternalError("cover for case " + to_string(tag) + " failed certification; uncovered point " +
                        format_lambda(cert.witness.lambda));
  return StrategyReport{std::move(tag), std::move(cover), std::move(cert), std::move(a)};
}

bool in_set(const Integer& l, std::initializer_list<long> values) {
  return std::any_of(values.begin(), values.end(), [&](long v) { return l == v; });
}

}  // namespace

StrategyReport cover_dim3(const LatticeSimplex& p) {
  if (p.dim() != 3) throw PreconditionError("cover_dim3: dimension " + std::to_string(p.dim()) + " != 3");
  const auto l = edge_length_matrix(p);
  if (l.min_length() < 2) throw PreconditionError("cover_dim3: l(P) = " + l.min_length().get_str() + " < 2");
  auto a = a_coefficients(p, 2);
  CaseTag tag;
  std::vector<Dilation> ds;
  if (a.all_nonnegative()) {
    tag.kind = CaseKind::AllNonNegative;
    tag.k = 2;
    for (std::size_t i = 0; i < 4; ++i) ds.push_back(build_apex_dilation(p, i, 2));
    return finish(p, std::move(tag), std::move(ds), std::move(a), 2);
  }

  const std::size_t v = *a.first_negative();
  std::vector<std::size_t> nb;
  std::size_t threes = 0;
  for (std::size_t j = 0; j < 4; ++j) {
    if (j == v) continue;
    nb.push_back(j);
    if (l(v, j) == 3) ++threes;
    if (mpz_even_p(l(v, j).get_mpz_t()))
      throw InternalError("cover_dim3: A_" + std::to_string(v) + " < 0 but edge to " + std::to_string(j) +
                          " has even length " + l(v, j).get_str());
  }
  if (threes < 2)
    throw InternalError("cover_dim3: A_" + std::to_string(v) + " < 0 with fewer than two edges of length 3");
  // u3: the longest neighbour, smallest index on ties.
  std::size_t u3 = nb[0];
  for (std::size_t j : nb)
    if (l(v, j) > l(v, u3)) u3 = j;
  std::vector<std::size_t> perm{v};
  for (std::size_t j : nb)
    if (j != u3) perm.push_back(j);
  perm.push_back(u3);
  if (l(perm[1], perm[2]) % 3 != 0)
    throw InternalError("cover_dim3: expected 3 | l12, got " + l(perm[1], perm[2]).get_str());

  tag.kind = CaseKind::Dim3Special;
  tag.relabeling = perm;
  for (std::size_t i = 0; i < 3; ++i)
    if (l(perm[3], perm[i]) != 2) tag.s.push_back(i);
  for (std::size_t i : tag.s) ds.push_back(relabeled_apex(p, perm, i, 3));
  ds.push_back(relabeled_apex(p, perm, 3, 2));
  return finish(p, std::move(tag), std::move(ds), std::move(a), 2);
}

StrategyReport cover_dim4(const LatticeSimplex& p) {
  if (p.dim() != 4) throw PreconditionError("cover_dim4: dimension " + std::to_string(p.dim()) + " != 4");
  const auto l = edge_length_matrix(p);
  if (l.min_length() < 3) throw PreconditionError("cover_dim4: l(P) = " + l.min_length().get_str() + " < 3");
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (l(i, j) == 5)
        throw PreconditionError("cover_dim4: edge " + std::to_string(i) + std::to_string(j) + " has length 5");

  auto a = a_coefficients(p, 3);
  CaseTag tag;
  std::vector<Dilation> ds;
  if (a.all_nonnegative()) {
    tag.kind = CaseKind::AllNonNegative;
    tag.k = 3;
    for (std::size_t i = 0; i < 5; ++i) ds.push_back(build_apex_dilation(p, i, 3));
    return finish(p, std::move(tag), std::move(ds), std::move(a), 3);
  }

  for (std::size_t w = 0; w < 5; ++w) {
    bool all4 = true;
    for (std::size_t j = 0; j < 5; ++j)
      if (j != w && l(w, j) % 4 != 0) all4 = false;
    if (all4) {
      tag.kind = CaseKind::CaseA;
      ds.push_back(explicit_dilation(p, 4, p.vertices()));
      return finish(p, std::move(tag), std::move(ds), std::move(a), 3);
    }
  }

  const std::size_t v = *a.first_negative();
  std::vector<std::size_t> fours, others;
  for (std::size_t j = 0; j < 5; ++j) {
    if (j == v) continue;
    (in_set(l(v, j), {4, 8}) ? fours : others).push_back(j);
  }
  auto require_div4 = [&](const std::vector<std::size_t>& idx) {
    for (std::size_t x = 0; x < idx.size(); ++x)
      for (std::size_t y = x + 1; y < idx.size(); ++y)
        if (l(idx[x], idx[y]) % 4 != 0)
          throw InternalError("cover_dim4: expected 4 | l(" + std::to_string(idx[x]) + "," + std::to_string(idx[y]) +
                              "), got " + l(idx[x], idx[y]).get_str());
  };

  if (fours.size() == 3) {
    require_div4(fours);
    std::vector<std::size_t> perm{v, fours[0], fours[1], fours[2], others[0]};
    tag.kind = CaseKind::CaseB;
    tag.relabeling = perm;
    for (std::size_t i = 0; i < 4; ++i)
      if (l(perm[i], perm[4]) != 3) tag.s.push_back(i);
    for (std::size_t i : tag.s) ds.push_back(relabeled_apex(p, perm, i, 4));
    ds.push_back(relabeled_apex(p, perm, 4, 3));
    return finish(p, std::move(tag), std::move(ds), std::move(a), 3);
  }

  if (fours.size() == 2) {
    require_div4(fours);
    std::size_t u3 = others[0], u4 = others[1];
    if (l(v, u3) != 11) std::swap(u3, u4);
    if (l(v, u3) != 11 || !in_set(l(v, u4), {7, 11, 14, 17}))
      throw InternalError("cover_dim4: two {4,8}-edges at vertex " + std::to_string(v) +
                          " but the remaining lengths are " + l(v, others[0]).get_str() + ", " +
                          l(v, others[1]).get_str());
    std::vector<std::size_t> perm{v, fours[0], fours[1], u3, u4};
    tag.kind = CaseKind::CaseC;
    tag.relabeling = perm;
    for (std::size_t i = 0; i < 5; ++i) ds.push_back(relabeled_apex(p, perm, i, 3));
    ds.push_back(relabeled_apex(p, perm, 0, 4));
    ds.push_back(relabeled_apex(p, perm, 0, 3, {0, 0, 0, 1}));
    ds.push_back(relabeled_apex(p, perm, 0, 3, {0, 0, 1, 0}));
    return finish(p, std::move(tag), std::move(ds), std::move(a), 3);
  }

  std::ostringstream msg;
  msg << "cover_dim4: no case matches vertex " << v << " (" << fours.size() << " edges of length 4 or 8); lengths";
  for (std::size_t j = 0; j < 5; ++j)
    if (j != v) msg << ' ' << l(v, j);
  throw InternalError(msg.str());
}

// ---------------------------------------------------------------------------
// Witness-guided search

namespace {

using DVec = std::vector<double>;

// Barycentric solve in doubles: returns the (n+1)x(n+1) inverse of
// [v_0 .. v_n ; 1 .. 1], or nothing when (numerically) singular.
std::optional<std::vector<DVec>> double_inverse(const std::vector<const DVec*>& verts) {
  const std::size_t m = verts.size();
  std::vector<DVec> a(m, DVec(2 * m, 0.0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) a[r][c] = r + 1 < m ? (*verts[c])[r] : 1.0;
    a[r][m + r] = 1.0;
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < m; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    if (std::fabs(a[piv][c]) < 1e-9) return std::nullopt;
    std::swap(a[c], a[piv]);
    const double d = a[c][c];
    for (double& x : a[c]) x /= d;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0.0) continue;
      const double f = a[r][c];
      for (std::size_t k = 0; k < 2 * m; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<DVec> inv(m, DVec(m));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) inv[r][c] = a[r][m + c];
  return inv;
}

bool double_inside(const std::vector<DVec>& inv, const DVec& y, double tol) {
  const std::size_t m = inv.size();
  for (std::size_t r = 0; r < m; ++r) {
    double s = inv[r][m - 1];
    for (std::size_t c = 0; c + 1 < m; ++c) s += inv[r][c] * y[c];
    if (s < -tol) return false;
  }
  return true;
}

double abs_det(const std::vector<const DVec*>& verts) {
  const std::size_t n = verts.size() - 1;
  std::vector<DVec> a(n, DVec(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = (*verts[c + 1])[r] - (*verts[0])[r];
  double det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    if (a[piv][c] == 0.0) return 0;
    std::swap(a[c], a[piv]);
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return std::fabs(det);
}

struct Score {
  std::size_t hits = 0;
  double volume = 0;
  bool operator>(const Score& o) const { return hits != o.hits ? hits > o.hits : volume > o.volume * (1 + 1e-12); }
};

class Searcher {
 public:
  Searcher(const LatticeSimplex& p, const Integer& k, const SearchBudget& budget)
      : p_(p), k_(k), budget_(budget), points_(lattice_points(p)) {
    for (const auto& pt : points_) {
      DVec d;
      std::vector<long> res;
      for (const auto& c : pt) {
        d.push_back(c.get_d());
        res.push_back(mod_floor(c, k).get_si());
      }
      dpoints_.push_back(std::move(d));
      classes_[res].push_back(dpoints_.size() - 1);
    }
  }

  // Uncovered uniform samples used to score candidates; refreshed against
  // the current cover whenever it runs low.
  void refresh_pool(const Cover& cover) {
    const CompiledCover compiled(cover);
    std::vector<std::vector<std::int64_t>> kept;
    for (auto& m : pool_)
      if (compiled.uncovered(m)) kept.push_back(std::move(m));
    pool_ = std::move(kept);
    for (int refill = 0; pool_.size() < 64 && refill < 4 && draws_ < 40; ++refill, ++draws_) {
      const std::uint64_t first = draws_ * budget_.score_samples;
      for (std::uint64_t s = 0; s < budget_.score_samples; ++s) {
        auto m = sampling::dyadic_simplex_point(budget_.seed, first + s, p_.num_vertices(),
                                                sampling::SimplexSampler::Uniform);
        if (compiled.uncovered(m)) pool_.push_back(std::move(m));
      }
    }
    pool_points_.clear();
    for (const auto& m : pool_) {
      DVec y(p_.dim(), 0.0);
      for (std::size_t i = 0; i < m.size(); ++i) {
        const double w = static_cast<double>(m[i]) / static_cast<double>(sampling::kDyadicOne);
        for (std::size_t c = 0; c < y.size(); ++c) y[c] += w * p_.vertex(i)[c].get_d();
      }
      pool_points_.push_back(std::move(y));
    }
  }

  std::optional<Dilation> find(const BarycentricCoords& witness) {
    const RationalPoint x = p_.from_barycentric(witness);
    DVec xd;
    for (const auto& q : x) xd.push_back(q.get_d());
    auto l1 = [&](std::size_t idx) {
      double s = 0;
      for (std::size_t c = 0; c < xd.size(); ++c) s += std::fabs(dpoints_[idx][c] - xd[c]);
      return s;
    };

    // Classes ordered by their nearest point to the witness.
    std::vector<std::pair<double, const std::vector<std::size_t>*>> order;
    for (const auto& [res, idx] : classes_) {
      if (idx.size() < p_.num_vertices()) continue;
      double best = INFINITY;
      for (std::size_t i : idx) best = std::min(best, l1(i));
      order.emplace_back(best, &idx);
    }
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    // Classes whose hull misses the witness do not count against the cap.
    std::optional<std::vector<std::size_t>> best;
    Score best_score;
    std::size_t examined = 0;
    for (const auto& [dist, idx] : order) {
      if (examined == budget_.residue_class_cap) break;
      std::vector<std::size_t> sorted = *idx;
      std::stable_sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) { return l1(a) < l1(b); });
      auto start = caratheodory(sorted, x);
      if (!start) continue;
      ++examined;
      auto improved = improve(*start, sorted, xd);
      const Score s = score(improved);
      if (!best || s > best_score) {
        if (!exact_contains(improved, x)) improved = *start;
        best = improved;
        best_score = score(improved);
      }
    }
    if (!best) return std::nullopt;
    std::vector<LatticeVector> verts;
    for (std::size_t i : *best) verts.push_back(points_[i]);
    auto d = explicit_dilation(p_, k_, std::move(verts));
    if (!dilation_contains(d, witness)) return std::nullopt;
    return d;
  }

 private:
  // Lattice points of one class whose hull contains x: an optimal basic
  // solution of  x = sum mu_p p, sum mu = 1, mu >= 0  (Caratheodory), with
  // far points preferred, completed to n+1 affinely independent points.
  std::optional<std::vector<std::size_t>> caratheodory(const std::vector<std::size_t>& cls, const RationalPoint& x) {
    std::vector<std::size_t> cols = cls;
    const std::size_t cap = 400;
    if (cols.size() > cap) {
      std::vector<std::size_t> spread;
      for (std::size_t i = 0; i < cap; ++i) spread.push_back(cols[i * cols.size() / cap]);
      cols = std::move(spread);
    }
    const std::size_t n = p_.dim();
    lp::Problem prob;
    for (std::size_t i : cols) {
      Rational d = 0;
      for (std::size_t c = 0; c < n; ++c) d += abs(Rational(points_[i][c]) - x[c]);
      prob.objective.push_back(d);
    }
    for (std::size_t c = 0; c <= n; ++c) {
      lp::Constraint con;
      con.relation = lp::Relation::Equal;
      for (std::size_t i : cols) con.row.push_back(c < n ? Rational(points_[i][c]) : Rational(1));
      con.rhs = c < n ? x[c] : Rational(1);
      prob.constraints.push_back(std::move(con));
    }
    const auto out = lp::solve(prob);
    if (out.status != lp::Status::Optimal) return std::nullopt;
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (sgn(out.point[j]) > 0) chosen.push_back(cols[j]);
    for (std::size_t i : cls) {
      if (chosen.size() == n + 1) break;
      if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
      chosen.push_back(i);
      if (affine_rank(chosen) < chosen.size()) chosen.pop_back();
    }
    if (chosen.size() != n + 1) return std::nullopt;
    return chosen;
  }

  std::size_t affine_rank(const std::vector<std::size_t>& idx) const {
    linalg::Matrix m;
    for (std::size_t i = 1; i < idx.size(); ++i) m.push_back(to_rational(points_[idx[i]] - points_[idx[0]]));
    return m.empty() ? 1 : linalg::rank(m) + 1;
  }

  bool exact_contains(const std::vector<std::size_t>& idx, const RationalPoint& x) const {
    std::vector<LatticeVector> v;
    for (std::size_t i : idx) v.push_back(points_[i]);
    try {
      return LatticeSimplex(std::move(v)).to_barycentric(x).in_simplex();
    } catch (const DegenerateError&) {
      return false;
    }
  }

  Score score(const std::vector<std::size_t>& idx) const {
    std::vector<const DVec*> v;
    for (std::size_t i : idx) v.push_back(&dpoints_[i]);
    Score s;
    s.volume = abs_det(v);
    const auto inv = double_inverse(v);
    if (!inv) return s;
    for (const auto& y : pool_points_)
      if (double_inside(*inv, y, 1e-12)) ++s.hits;
    return s;
  }

  // Single-vertex exchanges that keep the witness inside and raise the score.
  std::vector<std::size_t> improve(std::vector<std::size_t> cur, const std::vector<std::size_t>& cls,
                                   const DVec& xd) const {
    std::vector<std::size_t> cands;
    const std::size_t cap = budget_.max_candidates_per_round;
    if (cls.size() <= cap) {
      cands = cls;
    } else {
      for (std::size_t i = 0; i < cap; ++i) cands.push_back(cls[i * cls.size() / cap]);
    }
    Score cur_score = score(cur);
    for (int iter = 0; iter < 16; ++iter) {
      std::optional<std::pair<std::size_t, std::size_t>> move;
      Score move_score = cur_score;
      for (std::size_t slot = 0; slot < cur.size(); ++slot) {
        for (std::size_t c : cands) {
          if (std::find(cur.begin(), cur.end(), c) != cur.end()) continue;
          auto next = cur;
          next[slot] = c;
          std::vector<const DVec*> v;
          for (std::size_t i : next) v.push_back(&dpoints_[i]);
          const auto inv = double_inverse(v);
          if (!inv || !double_inside(*inv, xd, -1e-9)) continue;
          const Score s = score(next);
          if (s > move_score) {
            move_score = s;
            move = {slot, c};
          }
        }
      }
      if (!move) break;
      cur[move->first] = move->second;
      cur_score = move_score;
    }
    return cur;
  }

  const LatticeSimplex& p_;
  Integer k_;
  SearchBudget budget_;
  std::vector<LatticeVector> points_;
  std::vector<DVec> dpoints_;
  std::map<std::vector<long>, std::vector<std::size_t>> classes_;
  std::vector<std::vector<std::int64_t>> pool_;
  std::vector<DVec> pool_points_;
  std::uint64_t draws_ = 0;
};

}  // namespace

StrategyReport search_supplementary(const LatticeSimplex& p, const Integer& k, const Cover& base,
                                    const SearchBudget& budget, const std::vector<Dilation>& seeds) {
  if (budget.max_rounds == 0 || budget.max_candidates_per_round == 0 || budget.residue_class_cap == 0 ||
      budget.score_samples == 0)
    throw PreconditionError("search_supplementary: budget entries must be positive");
  if (k < 2) throw PreconditionError("search_supplementary: modulus must be at least 2");
  if (!(base.parent() == p)) throw PreconditionError("search_supplementary: base cover has another parent");
  for (const auto& s : seeds) {
    if (!(s.parent() == p)) throw PreconditionError("search_supplementary: seed dilation has another parent");
    if (s.modulus() < k) throw PreconditionError("search_supplementary: seed modulus below k");
  }

  ACoefficients a{k, {}};
  if (k <= edge_length_matrix(p).min_length()) a = a_coefficients(p, k);

  Cover cover = base;
  auto cert = certify(cover);
  CaseTag tag;
  std::size_t added = 0;
  std::vector<bool> used(seeds.size(), false);
  std::optional<Searcher> searcher;

  while (!cert.covered) {
    bool seeded = false;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      if (used[i] || !dilation_contains(seeds[i], cert.witness)) continue;
      used[i] = true;
      cover.add(seeds[i]);
      ++added;
      seeded = true;
    }
    if (seeded) {
      cert = certify(cover);
      continue;
    }
    if (tag.rounds == budget.max_rounds) {
      tag.kind = CaseKind::Unsupported;
      tag.reason = "search budget of " + std::to_string(budget.max_rounds) + " rounds exhausted";
      return StrategyReport{std::move(tag), std::move(cover), std::move(cert), std::move(a), added};
    }
    ++tag.rounds;
    if (!searcher) searcher.emplace(p, k, budget);
    searcher->refresh_pool(cover);
    auto d = searcher->find(cert.witness);
    if (!d) {
      tag.kind = CaseKind::Unsupported;
      tag.reason = "no " + k.get_str() + "-dilation inside P contains the witness";
      return StrategyReport{std::move(tag), std::move(cover), std::move(cert), std::move(a), added};
    }
    cover.add(std::move(*d));
    ++added;
    cert = certify(cover);
  }
  tag.kind = CaseKind::SupplementarySearch;
  return StrategyReport{std::move(tag), std::move(cover), std::move(cert), std::move(a), added};
}

StrategyReport cover_simplex(const LatticeSimplex& p, const SearchBudget& budget) {
  if (p.dim() == 3) return cover_dim3(p);
  if (p.dim() != 4)
    throw PreconditionError("cover_simplex: unsupported dimension " + std::to_string(p.dim()));
  const auto l = edge_length_matrix(p);
  bool has5 = false;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) has5 = has5 || l(i, j) == 5;
  if (!has5) return cover_dim4(p);
  if (l.min_length() < 3) throw PreconditionError("cover_simplex: l(P) = " + l.min_length().get_str() + " < 3");
  std::vector<Dilation> ds;
  for (std::size_t i = 0; i < 5; ++i) ds.push_back(build_apex_dilation(p, i, 3));
  return search_supplementary(p, 3, Cover(p, std::move(ds)), budget);
}

}  // namespace latcover
