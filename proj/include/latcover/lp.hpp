#pragma once

// Exact rational linear programming: a dense two-phase simplex method with
// Bland's rule. Intended for the tiny systems that arise in coverage
// certification (a handful of variables, a few dozen rows).

#include "latcover/arith.hpp"
#include "latcover/inequality.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace latcover::lp {

enum class Relation { LessEqual, Equal };

struct Constraint {
  std::vector<Rational> row;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// maximize objective . x  subject to constraints and x >= lower_bounds.
struct Problem {
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  std::vector<Rational> lower_bounds;  // empty means all zero
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Outcome {
  Status status = Status::Infeasible;
  Rational value;             // Optimal only
  std::vector<Rational> point;  // Optimal only
};

/// Exact optimum. The returned point is re-checked against every constraint;
/// a violation raises InternalError.
Outcome solve(const Problem& problem);

/// True when `x` satisfies every constraint and bound of `problem` exactly.
bool satisfies(const Problem& problem, const std::vector<Rational>& x);

struct StrictResult {
  bool feasible = false;          // open system nonempty (slack > 0)
  bool closure_feasible = false;  // closed system {<=} nonempty
  Rational slack;                 // optimal epsilon, in [0, 1]
  std::vector<Rational> witness;  // lambda at the optimum (closure feasible only)
};

/// Max-slack test of the open system {rows[m] holds} over the standard simplex
/// lambda >= 0, sum lambda = 1, lambda in R^{simplex_dim + 1}:
///   maximize eps s.t. a_m . lambda + eps <= c_m, 0 <= eps <= 1.
StrictResult strict_feasibility(std::span<const StrictInequality> rows, std::size_t simplex_dim);

}  // namespace latcover::lp
