#include "latcover/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace latcover {

Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0)
    throw ParseError("not an exact rational: '" + std::string(text) + "'");
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

Integer parse_integer(std::string_view text) {
  Integer z;
  const bool plain = !text.empty() && std::all_of(text.begin() + (text[0] == '-' ? 1 : 0),
                                                  text.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (!plain || text == "-" || z.set_str(std::string(text), 10) != 0)
    throw ParseError("not an integer: '" + std::string(text) + "'");
  return z;
}

bool fits_int64(const Integer& z) {
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return z >= lo && z <= hi;
}

std::int64_t to_int64(const Integer& z) {
  if (!fits_int64(z)) throw BudgetError("integer does not fit in 64 bits: " + z.get_str());
  std::int64_t out = 0;
  const std::string s = z.get_str();
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

LatticeVector operator*(const Integer& s, const LatticeVector& a) {
  LatticeVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}

RationalPoint to_rational(const LatticeVector& v) { return RationalPoint(v.begin(), v.end()); }

bool BarycentricCoords::in_simplex() const {
  return std::all_of(lambda.begin(), lambda.end(), [](const Rational& q) { return sgn(q) >= 0; });
}

// ---------------------------------------------------------------------------
// LatticeSimplex

LatticeSimplex::LatticeSimplex(std::vector<LatticeVector> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw PreconditionError("a simplex needs at least two vertices");
  const std::size_t n = vertices_.size() - 1;
  for (const auto& v : vertices_)
    if (v.size() != n)
      throw PreconditionError("vertex has " + std::to_string(v.size()) + " coordinates, expected " +
                              std::to_string(n));
  linalg::Matrix m(n + 1, std::vector<Rational>(n + 1));
  for (std::size_t c = 0; c <= n; ++c) {
    for (std::size_t r = 0; r < n; ++r) m[r][c] = vertices_[c][r];
    m[n][c] = 1;
  }
  auto inv = linalg::inverse(std::move(m));
  if (!inv) throw DegenerateError("simplex vertices are affinely dependent");
  inverse_ = std::move(*inv);
}

BarycentricCoords LatticeSimplex::to_barycentric(const RationalPoint& p) const {
  const std::size_t n = dim();
  if (p.size() != n) throw PreconditionError("point dimension mismatch");
  RationalPoint rhs(p);
  rhs.push_back(1);
  return {linalg::multiply(inverse_, rhs)};
}

RationalPoint LatticeSimplex::from_barycentric(const BarycentricCoords& b) const {
  const std::size_t n = dim();
  if (b.lambda.size() != n + 1) throw PreconditionError("barycentric dimension mismatch");
  RationalPoint p(n);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t c = 0; c < n; ++c) p[c] += b.lambda[i] * vertices_[i][c];
  return p;
}

LatticeSimplex LatticeSimplex::permuted(std::span<const std::size_t> perm) const {
  std::vector<LatticeVector> v;
  v.reserve(perm.size());
  for (auto i : perm) v.push_back(vertices_.at(i));
  return LatticeSimplex(std::move(v));
}

// ---------------------------------------------------------------------------
// EdgeLengthMatrix

EdgeLengthMatrix::EdgeLengthMatrix(std::vector<std::vector<Integer>> l) : l_(std::move(l)) {
  for (std::size_t i = 0; i < l_.size(); ++i) {
    if (l_[i].size() != l_.size()) throw PreconditionError("edge length matrix is not square");
    l_[i][i] = 0;
  }
  for (std::size_t i = 0; i < l_.size(); ++i)
    for (std::size_t j = 0; j < l_.size(); ++j) {
      if (i == j) continue;
      if (sgn(l_[i][j]) <= 0) throw PreconditionError("edge lengths must be positive");
      if (l_[i][j] != l_[j][i]) throw PreconditionError("edge length matrix is not symmetric");
    }
}

Integer EdgeLengthMatrix::min_length() const {
  Integer best = 0;
  for (std::size_t i = 0; i < l_.size(); ++i) {
    const Integer m = min_length_at(i);
    if (i == 0 || m < best) best = m;
  }
  return best;
}

Integer EdgeLengthMatrix::min_length_at(std::size_t i) const {
  Integer best = 0;
  bool first = true;
  for (std::size_t j = 0; j < l_.size(); ++j) {
    if (j == i) continue;
    if (first || l_[i][j] < best) best = l_[i][j];
    first = false;
  }
  return best;
}

EdgeLengthMatrix EdgeLengthMatrix::permuted(std::span<const std::size_t> perm) const {
  std::vector<std::vector<Integer>> out(perm.size(), std::vector<Integer>(perm.size()));
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = 0; b < perm.size(); ++b) out[a][b] = l_[perm[a]][perm[b]];
  return EdgeLengthMatrix(std::move(out));
}

// ---------------------------------------------------------------------------
// Lengths and directions

Integer lattice_length(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw PreconditionError("lattice_length: dimension mismatch");
  Integer g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) g = gcd_of(g, b[i] - a[i]);
  if (sgn(g) == 0) throw DegenerateError("lattice_length: degenerate edge (a == b)");
  return g;
}

EdgeLengthMatrix edge_length_matrix(const LatticeSimplex& p) {
  const std::size_t m = p.num_vertices();
  std::vector<std::vector<Integer>> l(m, std::vector<Integer>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) l[i][j] = l[j][i] = lattice_length(p.vertex(i), p.vertex(j));
  return EdgeLengthMatrix(std::move(l));
}

LatticeVector primitive_direction(const LatticeSimplex& p, std::size_t i, std::size_t j) {
  if (i == j) throw PreconditionError("primitive_direction: i == j");
  LatticeVector d = p.vertex(j) - p.vertex(i);
  const Integer l = lattice_length(p.vertex(i), p.vertex(j));
  for (auto& c : d) c /= l;
  return d;
}

// ---------------------------------------------------------------------------
// Facets

Rational AffineFunctional::evaluate(const RationalPoint& x) const {
  Rational s = offset;
  for (std::size_t i = 0; i < normal.size(); ++i) s += normal[i] * x[i];
  return s;
}

Integer AffineFunctional::evaluate(const LatticeVector& x) const {
  Integer s = offset;
  for (std::size_t i = 0; i < normal.size(); ++i) s += normal[i] * x[i];
  return s;
}

bool FacetSystem::contains(const RationalPoint& x) const {
  return std::all_of(facets.begin(), facets.end(),
                     [&](const AffineFunctional& f) { return sgn(f.evaluate(x)) >= 0; });
}

bool FacetSystem::contains(const LatticeVector& x) const {
  return std::all_of(facets.begin(), facets.end(),
                     [&](const AffineFunctional& f) { return sgn(f.evaluate(x)) >= 0; });
}

FacetSystem facet_system(std::span<const RationalPoint> vertices) {
  const std::size_t count = vertices.size();
  if (count < 2) throw DegenerateError("facet_system: need at least two vertices");
  const std::size_t n = count - 1;
  for (const auto& v : vertices)
    if (v.size() != n) throw DegenerateError("facet_system: vertex set is not a full-dimensional simplex");

  FacetSystem sys;
  sys.facets.reserve(count);
  for (std::size_t opp = 0; opp < count; ++opp) {
    // Normal of the hyperplane through all vertices except `opp`.
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < count; ++i)
      if (i != opp) on.push_back(i);
    linalg::Matrix diffs;
    for (std::size_t k = 1; k < on.size(); ++k) {
      std::vector<Rational> row(n);
      for (std::size_t c = 0; c < n; ++c) row[c] = vertices[on[k]][c] - vertices[on[0]][c];
      diffs.push_back(std::move(row));
    }
    std::vector<Rational> normal;
    if (n == 1) {
      normal = {Rational(1)};
    } else {
      normal = linalg::null_vector(std::move(diffs));
    }
    Rational offset = 0;
    for (std::size_t c = 0; c < n; ++c) offset -= normal[c] * vertices[on[0]][c];
    Rational at_opp = offset;
    for (std::size_t c = 0; c < n; ++c) at_opp += normal[c] * vertices[opp][c];
    if (sgn(at_opp) == 0) throw DegenerateError("facet_system: vertex set is affinely dependent");

    // Clear denominators, make coprime, orient positive at the opposite vertex.
    Integer den = offset.get_den();
    for (const auto& q : normal) den = lcm_of(den, q.get_den());
    AffineFunctional f;
    f.normal.resize(n);
    Integer g = 0;
    for (std::size_t c = 0; c < n; ++c) {
      f.normal[c] = normal[c].get_num() * (den / normal[c].get_den());
      g = gcd_of(g, f.normal[c]);
    }
    f.offset = offset.get_num() * (den / offset.get_den());
    g = gcd_of(g, f.offset);
    if (sgn(at_opp) < 0) g = -g;
    for (auto& c : f.normal) c /= g;
    f.offset /= g;
    sys.facets.push_back(std::move(f));
  }
  return sys;
}

FacetSystem facet_system(const LatticeSimplex& p) {
  const auto v = rational_vertices(p);
  return facet_system(v);
}

std::vector<RationalPoint> rational_vertices(const LatticeSimplex& p) {
  std::vector<RationalPoint> out;
  out.reserve(p.num_vertices());
  for (const auto& v : p.vertices()) out.push_back(to_rational(v));
  return out;
}

// ---------------------------------------------------------------------------
// Lattice points

namespace {

struct Box {
  std::vector<Integer> lo, hi;
};

Box bounding_box(std::span<const RationalPoint> vertices) {
  const std::size_t n = vertices.front().size();
  Box b{std::vector<Integer>(n), std::vector<Integer>(n)};
  for (std::size_t c = 0; c < n; ++c) {
    Rational lo = vertices[0][c], hi = vertices[0][c];
    for (const auto& v : vertices) {
      if (v[c] < lo) lo = v[c];
      if (v[c] > hi) hi = v[c];
    }
    b.lo[c] = ceil_of(lo);
    b.hi[c] = floor_of(hi);
  }
  return b;
}

void charge(std::size_t& used, std::size_t amount, std::size_t cap, const char* what) {
  used += amount;
  if (used > cap)
    throw BudgetError(std::string("lattice_points: ") + what + " budget of " + std::to_string(cap) + " exceeded");
}

// Full-dimensional case: scan all but the last axis, solve the last axis
// exactly from the facet inequalities.
std::vector<LatticeVector> scan_full(std::span<const RationalPoint> vertices, const EnumerationBudget& budget) {
  const std::size_t n = vertices.front().size();
  const FacetSystem sys = facet_system(vertices);
  const Box box = bounding_box(vertices);
  std::vector<LatticeVector> out;
  for (std::size_t c = 0; c < n; ++c)
    if (box.lo[c] > box.hi[c]) return out;

  std::size_t cells = 0;
  LatticeVector x(box.lo);
  const std::size_t last = n - 1;
  while (true) {
    if (last > 0) charge(cells, 1, budget.max_cells, "cell");
    // Interval of the last coordinate allowed by every facet.
    Integer lo = box.lo[last], hi = box.hi[last];
    bool empty = false;
    for (const auto& f : sys.facets) {
      Integer rest = f.offset;
      for (std::size_t c = 0; c < last; ++c) rest += f.normal[c] * x[c];
      const Integer& a = f.normal[last];
      if (sgn(a) == 0) {
        if (sgn(rest) < 0) {
          empty = true;
          break;
        }
      } else if (sgn(a) > 0) {
        // a*t >= -rest
        Integer t;
        Integer neg = -rest;
        mpz_cdiv_q(t.get_mpz_t(), neg.get_mpz_t(), a.get_mpz_t());
        if (t > lo) lo = t;
      } else {
        Integer t;
        Integer neg = -rest;
        mpz_fdiv_q(t.get_mpz_t(), neg.get_mpz_t(), a.get_mpz_t());
        if (t < hi) hi = t;
      }
    }
    if (!empty && lo <= hi) {
      const Integer span = hi - lo + 1;
      if (!span.fits_ulong_p()) throw BudgetError("lattice_points: point budget exceeded");
      charge(cells, span.get_ui(), budget.max_cells, "cell");
      if (out.size() + span.get_ui() > budget.max_points)
        throw BudgetError("lattice_points: point budget of " + std::to_string(budget.max_points) + " exceeded");
      for (Integer t = lo; t <= hi; ++t) {
        x[last] = t;
        out.push_back(x);
      }
    }
    // Next cell of the outer axes.
    std::size_t c = last;
    while (c > 0) {
      --c;
      if (x[c] < box.hi[c]) {
        ++x[c];
        for (std::size_t d = c + 1; d < last; ++d) x[d] = box.lo[d];
        break;
      }
      if (c == 0) return out;
    }
    if (last == 0) return out;
  }
}

// Lower-dimensional simplices (e.g. a segment in Z^4): full box scan with an
// exact affine-coordinate membership test.
std::vector<LatticeVector> scan_lower(std::span<const RationalPoint> vertices, const EnumerationBudget& budget) {
  const std::size_t n = vertices.front().size();
  const std::size_t m = vertices.size() - 1;
  linalg::Matrix d(n, std::vector<Rational>(m));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < m; ++k) d[r][k] = vertices[k + 1][r] - vertices[0][r];
  if (linalg::rank(d) != m) throw DegenerateError("lattice_points: vertices are affinely dependent");
  // Pick m independent coordinate rows.
  std::vector<std::size_t> rows;
  linalg::Matrix acc;
  for (std::size_t r = 0; r < n && rows.size() < m; ++r) {
    acc.push_back(d[r]);
    if (linalg::rank(acc) == acc.size()) {
      rows.push_back(r);
    } else {
      acc.pop_back();
    }
  }
  const auto inv = linalg::inverse(acc);
  const Box box = bounding_box(vertices);
  std::vector<LatticeVector> out;
  for (std::size_t c = 0; c < n; ++c)
    if (box.lo[c] > box.hi[c]) return out;

  std::size_t cells = 0;
  LatticeVector x(box.lo);
  while (true) {
    charge(cells, 1, budget.max_cells, "cell");
    std::vector<Rational> rhs(m);
    for (std::size_t k = 0; k < m; ++k) rhs[k] = x[rows[k]] - vertices[0][rows[k]];
    const auto mu = linalg::multiply(*inv, rhs);
    bool inside = true;
    Rational total = 0;
    for (const auto& q : mu) {
      if (sgn(q) < 0) inside = false;
      total += q;
    }
    if (total > 1) inside = false;
    for (std::size_t r = 0; inside && r < n; ++r) {
      Rational v = vertices[0][r];
      for (std::size_t k = 0; k < m; ++k) v += d[r][k] * mu[k];
      if (v != x[r]) inside = false;
    }
    if (inside) {
      if (out.size() + 1 > budget.max_points) throw BudgetError("lattice_points: point budget exceeded");
      out.push_back(x);
    }
    std::size_t c = n;
    while (true) {
      if (c == 0) return out;
      --c;
      if (x[c] < box.hi[c]) {
        ++x[c];
        for (std::size_t e = c + 1; e < n; ++e) x[e] = box.lo[e];
        break;
      }
    }
  }
}

}  // namespace

std::vector<LatticeVector> lattice_points(std::span<const RationalPoint> vertices, const EnumerationBudget& budget) {
  if (vertices.empty()) return {};
  const std::size_t n = vertices.front().size();
  for (const auto& v : vertices)
    if (v.size() != n) throw PreconditionError("lattice_points: inconsistent vertex dimensions");
  if (n == 0) return {LatticeVector{}};
  auto out = vertices.size() == n + 1 ? scan_full(vertices, budget) : scan_lower(vertices, budget);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> lattice_points(const LatticeSimplex& p, const EnumerationBudget& budget) {
  const auto v = rational_vertices(p);
  return lattice_points(v, budget);
}

}  // namespace latcover
