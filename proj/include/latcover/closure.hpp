#pragma once

// Brute-force check of (P ∩ M) + (rP ∩ M) = (r+1)P ∩ M for small r.

#include "latcover/strategy.hpp"

namespace latcover {

struct ClosureFailure {
  std::size_t r = 0;
  LatticeVector point;  // in (r+1)P but not a sum
};

struct ClosureReport {
  std::size_t r_max = 0;
  std::vector<ClosureFailure> failures;  // at most `max_failures` per r are kept
  std::size_t failure_count = 0;
  // counts[r - 1] = #(rP ∩ M) for r = 1 .. r_max + 1.
  std::vector<std::size_t> counts;

  bool closed() const { return failure_count == 0; }
};

struct ClosureBudget {
  std::size_t max_points = 200'000;  // per dilate
  std::size_t max_failures = 16;
  unsigned threads = 1;
};

/// rP, vertex-wise.
LatticeSimplex scaled(const LatticeSimplex& p, const Integer& r);

/// Throws PreconditionError for r_max < 1 and BudgetError when a dilate has
/// more than budget.max_points lattice points.
ClosureReport is_integrally_closed_up_to(const LatticeSimplex& p, std::size_t r_max,
                                         const ClosureBudget& budget = {});

/// The report must be Covered with every modulus >= n - 1. A failure of the
/// closure check then throws InternalError.
ClosureReport covered_implies_closed_check(const StrategyReport& report, std::size_t r_max,
                                           const ClosureBudget& budget = {});

}  // namespace latcover
