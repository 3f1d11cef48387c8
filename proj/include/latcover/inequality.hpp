#pragma once

#include "latcover/arith.hpp"

#include <string>
#include <vector>

namespace latcover {

/// coefficients . lambda < offset, over barycentric coordinates lambda.
struct StrictInequality {
  std::vector<Rational> coefficients;
  Rational offset;

  bool holds(const std::vector<Rational>& lambda) const;
  /// Same half-space scaled to coprime integers (positive factor only).
  StrictInequality normalized() const;
  /// True when both describe the same open half-space of R^{n+1}, i.e. they
  /// differ by a positive factor.
  bool equivalent(const StrictInequality& other) const;
  std::string to_string() const;

  bool operator==(const StrictInequality&) const = default;
};

/// Disjunction: the point lies outside the dilation iff some branch holds.
/// An empty branch list means the condition is never satisfied (the
/// dilation contains all of the parent simplex).
struct NonMembershipCondition {
  std::vector<StrictInequality> branches;

  bool holds(const std::vector<Rational>& lambda) const;
  bool never_satisfied() const { return branches.empty(); }
};

}  // namespace latcover
