#pragma once

// Sub-simplices of a lattice simplex P that are k-fold dilations of lattice
// simplices, with their membership tests written in P's barycentric
// coordinates.
//
// Apex dilation P_{i,k}: keep u_i and, along every edge u_i u_j, stop after
// l_ij - r_ij lattice steps where r_ij = l_ij mod k. Its non-membership
// condition is the single strict row
//     lambda_i - sum_{j != i} r_ij / (l_ij - r_ij) * lambda_j < 0.
// A translated dilation shifts P_{i,k} by sum_j t_j (u_j - u_i) / l_ij and
// adds one branch lambda_j < t_j / l_ij for every j with t_j > 0.

#include "latcover/inequality.hpp"
#include "latcover/lattice.hpp"

#include <variant>

namespace latcover {

struct ApexSpec {
  std::size_t apex = 0;
  Integer modulus;
  // One entry per vertex of the parent; the entry at `apex` is always 0.
  std::vector<Integer> translation;
};

struct ExplicitSpec {
  Integer modulus;
  std::vector<LatticeVector> vertices;
};

using DilationSpec = std::variant<ApexSpec, ExplicitSpec>;

class Dilation {
 public:
  const DilationSpec& spec() const { return spec_; }
  const std::vector<LatticeVector>& vertices() const { return vertices_; }
  const Integer& modulus() const { return modulus_; }
  const LatticeSimplex& parent() const { return parent_; }
  const NonMembershipCondition& nonmembership() const { return condition_; }
  bool is_apex() const { return std::holds_alternative<ApexSpec>(spec_); }
  bool is_translated() const;

 private:
  Dilation(DilationSpec spec, std::vector<LatticeVector> vertices, Integer modulus, LatticeSimplex parent,
           NonMembershipCondition condition)
      : spec_(std::move(spec)),
        vertices_(std::move(vertices)),
        modulus_(std::move(modulus)),
        parent_(std::move(parent)),
        condition_(std::move(condition)) {}

  friend Dilation translate_dilation(const LatticeSimplex&, std::size_t, const Integer&,
                                     const std::vector<Integer>&);
  friend Dilation explicit_dilation(const LatticeSimplex&, const Integer&, std::vector<LatticeVector>,
                                    bool);

  DilationSpec spec_;
  std::vector<LatticeVector> vertices_;
  Integer modulus_;
  LatticeSimplex parent_;
  NonMembershipCondition condition_;
};

/// Least non-negative r with r = l (mod k).
Integer residue(const Integer& l, const Integer& k);

/// The fraction r / (l - r) for an edge of length l and modulus k < l or k | l.
Rational apex_fraction(const Integer& l, const Integer& k);

/// Throws PreconditionError unless 2 <= k <= min_j l_ij.
Dilation build_apex_dilation(const LatticeSimplex& p, std::size_t i, const Integer& k);

/// `t` has one entry per vertex of P (t[i] must be 0), or one entry per j != i
/// in increasing j. Throws PreconditionError when the translate leaves P.
Dilation translate_dilation(const LatticeSimplex& p, std::size_t i, const Integer& k,
                            const std::vector<Integer>& t);

/// Validates an explicit k-dilation: n+1 affinely independent lattice points
/// of P whose pairwise differences are divisible by k. With `prune`, facet
/// branches that cannot hold anywhere on P are dropped (exact LP).
Dilation explicit_dilation(const LatticeSimplex& p, const Integer& k, std::vector<LatticeVector> vertices,
                           bool prune = true);

Dilation make_dilation(const LatticeSimplex& p, const DilationSpec& spec);

/// sum_j t_j / l_ij <= min_s r_is / l_is (with `t` in either layout above).
bool translation_valid(const LatticeSimplex& p, std::size_t i, const Integer& k, const std::vector<Integer>& t);

StrictInequality apex_nonmembership(const LatticeSimplex& p, std::size_t i, const Integer& k);
NonMembershipCondition translated_nonmembership(const LatticeSimplex& p, std::size_t i, const Integer& k,
                                                const std::vector<Integer>& t);
NonMembershipCondition explicit_nonmembership(const LatticeSimplex& p, std::span<const LatticeVector> vertices,
                                              bool prune = true);

/// lambda are barycentric coordinates with respect to d.parent(). Points
/// outside the parent are never contained.
bool dilation_contains(const Dilation& d, const BarycentricCoords& lambda);

/// All pairwise vertex differences divisible by k.
bool is_k_dilation(std::span<const LatticeVector> vertices, const Integer& k);

/// Translation vector in the full per-vertex layout.
std::vector<Integer> full_translation(std::size_t num_vertices, std::size_t apex, const std::vector<Integer>& t);

}  // namespace latcover
