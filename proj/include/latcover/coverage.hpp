#pragma once

// Deciding whether a family of dilations covers its parent simplex.
//
// A point of P is uncovered iff it satisfies the non-membership condition of
// every dilation. Each condition is a disjunction of strict rows, so the
// uncovered set is a union over the Cartesian product of branches (the DNF);
// every product term is an open polyhedron tested by the max-slack LP.

#include "latcover/dilation.hpp"
#include "latcover/lp.hpp"
#include "latcover/sampler.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace latcover {

class Cover {
 public:
  /// Throws PreconditionError when empty or when a dilation has another parent.
  Cover(LatticeSimplex parent, std::vector<Dilation> dilations);

  const LatticeSimplex& parent() const { return parent_; }
  const std::vector<Dilation>& dilations() const { return dilations_; }
  std::size_t size() const { return dilations_.size(); }
  void add(Dilation d);

 private:
  LatticeSimplex parent_;
  std::vector<Dilation> dilations_;
};

struct ACoefficients {
  Integer k;
  std::vector<Rational> a;

  bool all_nonnegative() const;
  /// Smallest index with a negative coefficient.
  std::optional<std::size_t> first_negative() const;
};

/// A_i = 1 - sum_{j != i} r_ji / (l_ji - r_ji), r_ji = l_ji mod k.
/// Throws PreconditionError unless 2 <= k <= l(P).
ACoefficients a_coefficients(const LatticeSimplex& p, const Integer& k);

struct CertifyOptions {
  // Drop branches that are unsatisfiable on their own before forming products.
  bool prune_branches = true;
  // Depth-first search over the product, cutting any infeasible prefix.
  // Without it every full product term is solved.
  bool prune_prefixes = true;
  std::size_t max_branches = 10'000;
  // Cap on LP solves made by the depth-first search.
  std::size_t max_lp_solves = 1'000'000;
};

using BranchSystem = std::vector<StrictInequality>;

/// Product of the dilations' branch lists in lexicographic order.
/// Throws BudgetError past options.max_branches terms.
std::vector<BranchSystem> noncoverage_dnf(const Cover& cover, const CertifyOptions& options = {});

struct Certificate {
  bool covered = false;
  // Witness only: strictly outside every dilation, strictly inside P.
  BarycentricCoords witness;
  // Witness only: chosen branch index per dilation.
  std::vector<std::size_t> branch;
  std::size_t branches_checked = 0;
};

/// Exact coverage decision. A witness is re-verified against every dilation
/// before it is returned.
Certificate certify(const Cover& cover, const CertifyOptions& options = {});

struct MonteCarloResult {
  std::uint64_t samples = 0;
  std::uint64_t uncovered = 0;
  double rate = 0;
  double stderr_rate = 0;
};

struct MonteCarloOptions {
  sampling::SimplexSampler sampler = sampling::SimplexSampler::NormalizedCube;
  unsigned threads = 1;
  // When set, called with the cumulative counts after every `trace_every`
  // samples, in index order.
  std::uint64_t trace_every = 0;
  std::function<void(std::uint64_t samples, std::uint64_t uncovered)> trace;
};

/// Fraction of sampled points of P lying outside every dilation. Membership
/// is tested exactly on dyadic barycentric coordinates; only the sampling
/// distribution is approximate. Use SimplexSampler::Uniform for a volume
/// fraction.
MonteCarloResult monte_carlo_uncovered(const Cover& cover, std::uint64_t samples, std::uint64_t seed,
                                       const MonteCarloOptions& options = {});

/// Exact integer form of a cover's conditions for fast evaluation at dyadic
/// points m / 2^53.
class CompiledCover {
 public:
  explicit CompiledCover(const Cover& cover);
  /// `m` sums to 2^53 and is nonnegative.
  bool uncovered(std::span<const std::int64_t> m) const;
  bool contains(std::size_t dilation, std::span<const std::int64_t> m) const;
  std::size_t size() const { return rows_.size(); }

 private:
  struct Row {
    std::vector<Integer> a;
    Integer c_scaled;  // c * 2^53
    std::vector<std::int64_t> a64;
    __int128 c128 = 0;
    bool narrow = false;
    bool holds(std::span<const std::int64_t> m) const;
  };
  std::vector<std::vector<Row>> rows_;  // per dilation, per branch
};

}  // namespace latcover
