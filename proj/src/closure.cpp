#include "latcover/closure.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

namespace latcover {

namespace {

using Key = std::vector<std::int64_t>;

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::int64_t x : k) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

using KeySet = std::unordered_set<Key, KeyHash>;

std::vector<Key> points_of(const LatticeSimplex& p, const Integer& r, const ClosureBudget& budget) {
  EnumerationBudget eb;
  eb.max_points = budget.max_points;
  eb.max_cells = std::max<std::size_t>(eb.max_cells, 50 * budget.max_points);
  std::vector<LatticeVector> pts;
  try {
    pts = lattice_points(scaled(p, r), eb);
  } catch (const BudgetError& e) {
    throw BudgetError("closure: " + r.get_str() + "P exceeds the budget of " + std::to_string(budget.max_points) +
                      " lattice points (" + e.what() + ")");
  }
  std::vector<Key> out;
  out.reserve(pts.size());
  for (const auto& v : pts) {
    Key k;
    for (const auto& c : v) {
      if (!fits_int64(c)) throw PreconditionError("closure: coordinates exceed 64 bits");
      k.push_back(to_int64(c));
    }
    out.push_back(std::move(k));
  }
  return out;
}

}  // namespace

LatticeSimplex scaled(const LatticeSimplex& p, const Integer& r) {
  std::vector<LatticeVector> v;
  for (const auto& u : p.vertices()) v.push_back(r * u);
  return LatticeSimplex(std::move(v));
}

ClosureReport is_integrally_closed_up_to(const LatticeSimplex& p, std::size_t r_max, const ClosureBudget& budget) {
  if (r_max < 1) throw PreconditionError("is_integrally_closed_up_to: r_max must be at least 1");
  ClosureReport report;
  report.r_max = r_max;

  const auto base = points_of(p, 1, budget);
  report.counts.push_back(base.size());
  auto current = base;  // rP ∩ M
  const std::size_t n = p.dim();

  for (std::size_t r = 1; r <= r_max; ++r) {
    const auto next = points_of(p, Integer(static_cast<unsigned long>(r + 1)), budget);
    report.counts.push_back(next.size());
    const KeySet target(next.begin(), next.end());

    // Pairwise sums, split over the points of P.
    const unsigned threads = std::max(1u, budget.threads);
    std::vector<KeySet> partial(threads);
    std::vector<char> stray(threads, 0);
    auto work = [&](unsigned t) {
      Key s(n);
      for (std::size_t a = t; a < base.size(); a += threads) {
        for (const auto& b : current) {
          for (std::size_t c = 0; c < n; ++c) s[c] = base[a][c] + b[c];
          if (!target.count(s)) stray[t] = 1;
          partial[t].insert(s);
        }
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    if (std::any_of(stray.begin(), stray.end(), [](char c) { return c != 0; }))
      throw InternalError("closure: a sum of lattice points of P and rP lies outside (r+1)P");
    KeySet sums = std::move(partial[0]);
    for (unsigned t = 1; t < threads; ++t) sums.insert(partial[t].begin(), partial[t].end());

    std::size_t kept = 0;
    for (const auto& q : next) {
      if (sums.count(q)) continue;
      ++report.failure_count;
      if (kept++ < budget.max_failures) {
        LatticeVector v;
        for (std::int64_t x : q) v.emplace_back(static_cast<long>(x));
        report.failures.push_back({r, std::move(v)});
      }
    }
    current = next;
  }
  return report;
}

ClosureReport covered_implies_closed_check(const StrategyReport& report, std::size_t r_max, const ClosureBudget& budget) {
  const auto& p = report.cover.parent();
  if (!report.certificate.covered) throw PreconditionError("covered_implies_closed_check: cover is not certified");
  if (min_modulus(report.cover) < static_cast<long>(p.dim()) - 1)
    throw PreconditionError("covered_implies_closed_check: a dilation has modulus below n - 1");
  auto out = is_integrally_closed_up_to(p, r_max, budget);
  if (!out.closed()) {
    std::string pt;
    for (const auto& c : out.failures.front().point) pt += (pt.empty() ? "" : ",") + c.get_str();
    throw InternalError("covered simplex is not integrally closed: (" + pt + ") in " +
                        std::to_string(out.failures.front().r + 1) + "P is not a sum");
  }
  return out;
}

}  // namespace latcover
