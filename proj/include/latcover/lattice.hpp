#pragma once

// Exact geometry of full-dimensional lattice simplices: lattice lengths,
// barycentric coordinates, facet inequalities and lattice-point enumeration.

#include "latcover/arith.hpp"
#include "latcover/linalg.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace latcover {

using LatticeVector = std::vector<Integer>;
using RationalPoint = std::vector<Rational>;

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator*(const Integer& s, const LatticeVector& a);
RationalPoint to_rational(const LatticeVector& v);

/// Exact barycentric coordinates. Entries may be negative when the point lies
/// outside the simplex they were computed against.
struct BarycentricCoords {
  std::vector<Rational> lambda;

  bool in_simplex() const;
  bool operator==(const BarycentricCoords&) const = default;
};

/// Conv(u_0, ..., u_n) in Z^n with affinely independent vertices. Vertex order
/// is significant and never canonicalized.
class LatticeSimplex {
 public:
  /// Throws DegenerateError when the vertices do not span Z^n affinely, and
  /// PreconditionError on inconsistent vector lengths.
  explicit LatticeSimplex(std::vector<LatticeVector> vertices);

  std::size_t dim() const { return vertices_.size() - 1; }
  std::size_t num_vertices() const { return vertices_.size(); }
  const LatticeVector& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::vector<LatticeVector>& vertices() const { return vertices_; }

  BarycentricCoords to_barycentric(const RationalPoint& p) const;
  RationalPoint from_barycentric(const BarycentricCoords& b) const;

  /// Same vertices in the order perm[0], perm[1], ...
  LatticeSimplex permuted(std::span<const std::size_t> perm) const;

  bool operator==(const LatticeSimplex& o) const { return vertices_ == o.vertices_; }

 private:
  std::vector<LatticeVector> vertices_;
  linalg::Matrix inverse_;  // inverse of the (n+1)x(n+1) matrix [u_0 .. u_n ; 1 .. 1]
};

/// Symmetric matrix of lattice lengths l_ij between vertices; diagonal is 0.
class EdgeLengthMatrix {
 public:
  EdgeLengthMatrix() = default;
  /// Throws PreconditionError unless square, symmetric and positive off the diagonal.
  explicit EdgeLengthMatrix(std::vector<std::vector<Integer>> l);

  std::size_t size() const { return l_.size(); }
  const Integer& operator()(std::size_t i, std::size_t j) const { return l_[i][j]; }
  /// l(P): minimum over all edges.
  Integer min_length() const;
  /// Minimum over the edges incident to vertex i.
  Integer min_length_at(std::size_t i) const;
  EdgeLengthMatrix permuted(std::span<const std::size_t> perm) const;
  const std::vector<std::vector<Integer>>& rows() const { return l_; }

  bool operator==(const EdgeLengthMatrix&) const = default;

 private:
  std::vector<std::vector<Integer>> l_;
};

/// f(x) = normal . x + offset.
struct AffineFunctional {
  std::vector<Integer> normal;
  Integer offset;

  Rational evaluate(const RationalPoint& x) const;
  Integer evaluate(const LatticeVector& x) const;
  bool operator==(const AffineFunctional&) const = default;
};

/// One functional per vertex: facets[i] vanishes on the facet opposite
/// vertex i and is positive at vertex i. Coefficients are coprime integers.
struct FacetSystem {
  std::vector<AffineFunctional> facets;

  bool contains(const RationalPoint& x) const;
  bool contains(const LatticeVector& x) const;
};

struct EnumerationBudget {
  // Cells of the bounding box visited by the scan. The last axis is solved as
  // an exact interval, so it contributes emitted points only.
  std::size_t max_cells = 10'000'000;
  std::size_t max_points = 10'000'000;
};

/// gcd of |b - a|; equals (#lattice points on [a, b]) - 1. Throws
/// DegenerateError when a == b.
Integer lattice_length(const LatticeVector& a, const LatticeVector& b);

EdgeLengthMatrix edge_length_matrix(const LatticeSimplex& p);

/// (u_j - u_i) / l_ij.
LatticeVector primitive_direction(const LatticeSimplex& p, std::size_t i, std::size_t j);

inline BarycentricCoords to_barycentric(const LatticeSimplex& p, const RationalPoint& x) {
  return p.to_barycentric(x);
}
inline RationalPoint from_barycentric(const LatticeSimplex& p, const BarycentricCoords& b) {
  return p.from_barycentric(b);
}

FacetSystem facet_system(std::span<const RationalPoint> vertices);
FacetSystem facet_system(const LatticeSimplex& p);

/// All integer points of Conv(vertices), sorted lexicographically.
std::vector<LatticeVector> lattice_points(std::span<const RationalPoint> vertices,
                                          const EnumerationBudget& budget = {});
std::vector<LatticeVector> lattice_points(const LatticeSimplex& p,
                                          const EnumerationBudget& budget = {});

std::vector<RationalPoint> rational_vertices(const LatticeSimplex& p);

}  // namespace latcover
