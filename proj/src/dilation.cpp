#include "latcover/dilation.hpp"

#include "latcover/lp.hpp"

#include <algorithm>

namespace latcover {

namespace {

void check_apex_range(const LatticeSimplex& p, std::size_t i, const Integer& k) {
  if (i >= p.num_vertices()) throw PreconditionError("apex index out of range");
  if (k < 2) throw PreconditionError("dilation modulus must be at least 2");
  const Integer bound = edge_length_matrix(p).min_length_at(i);
  if (k > bound)
    throw PreconditionError("modulus " + k.get_str() + " exceeds the shortest edge at vertex " + std::to_string(i) +
                            " (" + bound.get_str() + ")");
}

}  // namespace

bool Dilation::is_translated() const {
  const auto* a = std::get_if<ApexSpec>(&spec_);
  return a && std::any_of(a->translation.begin(), a->translation.end(), [](const Integer& t) { return sgn(t) != 0; });
}

Integer residue(const Integer& l, const Integer& k) { return mod_floor(l, k); }

Rational apex_fraction(const Integer& l, const Integer& k) {
  const Integer r = residue(l, k);
  return make_rational(r, l - r);
}

std::vector<Integer> full_translation(std::size_t num_vertices, std::size_t apex, const std::vector<Integer>& t) {
  if (t.empty()) return std::vector<Integer>(num_vertices, Integer(0));
  if (t.size() == num_vertices) {
    if (sgn(t[apex]) != 0) throw PreconditionError("translation entry at the apex must be 0");
    return t;
  }
  if (t.size() + 1 != num_vertices)
    throw PreconditionError("translation has " + std::to_string(t.size()) + " entries, expected " +
                            std::to_string(num_vertices - 1));
  std::vector<Integer> full(num_vertices, Integer(0));
  for (std::size_t j = 0, k = 0; j < num_vertices; ++j)
    if (j != apex) full[j] = t[k++];
  return full;
}

bool translation_valid(const LatticeSimplex& p, std::size_t i, const Integer& k, const std::vector<Integer>& t) {
  check_apex_range(p, i, k);
  const auto full = full_translation(p.num_vertices(), i, t);
  const auto l = edge_length_matrix(p);
  Rational used = 0;
  Rational room = 1;
  bool first = true;
  for (std::size_t j = 0; j < p.num_vertices(); ++j) {
    if (j == i) continue;
    if (sgn(full[j]) < 0) return false;
    used += make_rational(full[j], l(i, j));
    const Rational r = make_rational(residue(l(i, j), k), l(i, j));
    if (first || r < room) room = r;
    first = false;
  }
  return used <= room;
}

StrictInequality apex_nonmembership(const LatticeSimplex& p, std::size_t i, const Integer& k) {
  check_apex_range(p, i, k);
  const auto l = edge_length_matrix(p);
  StrictInequality s;
  s.coefficients.assign(p.num_vertices(), Rational(0));
  s.coefficients[i] = 1;
  for (std::size_t j = 0; j < p.num_vertices(); ++j)
    if (j != i) s.coefficients[j] = -apex_fraction(l(i, j), k);
  s.offset = 0;
  return s;
}

NonMembershipCondition translated_nonmembership(const LatticeSimplex& p, std::size_t i, const Integer& k,
                                                const std::vector<Integer>& t) {
  const auto full = full_translation(p.num_vertices(), i, t);
  if (!translation_valid(p, i, k, full)) throw PreconditionError("translation leaves the parent simplex");
  const auto l = edge_length_matrix(p);
  NonMembershipCondition c;
  StrictInequality main = apex_nonmembership(p, i, k);
  for (std::size_t j = 0; j < p.num_vertices(); ++j) {
    if (j == i || sgn(full[j]) == 0) continue;
    StrictInequality b;
    b.coefficients.assign(p.num_vertices(), Rational(0));
    b.coefficients[j] = 1;
    b.offset = make_rational(full[j], l(i, j));
    c.branches.push_back(std::move(b));
    main.offset -= make_rational(full[j], l(i, j) - residue(l(i, j), k));
  }
  c.branches.push_back(std::move(main));
  return c;
}

Dilation translate_dilation(const LatticeSimplex& p, std::size_t i, const Integer& k, const std::vector<Integer>& t) {
  auto full = full_translation(p.num_vertices(), i, t);
  auto condition = translated_nonmembership(p, i, k, full);
  const auto l = edge_length_matrix(p);

  LatticeVector shift(p.dim(), Integer(0));
  for (std::size_t j = 0; j < p.num_vertices(); ++j)
    if (j != i && sgn(full[j]) != 0) shift = shift + full[j] * primitive_direction(p, i, j);

  std::vector<LatticeVector> verts(p.num_vertices());
  for (std::size_t j = 0; j < p.num_vertices(); ++j) {
    LatticeVector v = p.vertex(i);
    if (j != i) v = v + (l(i, j) - residue(l(i, j), k)) * primitive_direction(p, i, j);
    verts[j] = v + shift;
  }
  return Dilation(ApexSpec{i, k, std::move(full)}, std::move(verts), k, p, std::move(condition));
}

Dilation build_apex_dilation(const LatticeSimplex& p, std::size_t i, const Integer& k) {
  return translate_dilation(p, i, k, {});
}

bool is_k_dilation(std::span<const LatticeVector> vertices, const Integer& k) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      for (std::size_t c = 0; c < vertices[a].size(); ++c)
        if (sgn(mod_floor(vertices[a][c] - vertices[b][c], k)) != 0) return false;
  return true;
}

NonMembershipCondition explicit_nonmembership(const LatticeSimplex& p, std::span<const LatticeVector> vertices,
                                              bool prune) {
  std::vector<RationalPoint> rv;
  rv.reserve(vertices.size());
  for (const auto& v : vertices) rv.push_back(to_rational(v));
  const FacetSystem sys = facet_system(rv);

  // f is affine, so f(sum lambda_i u_i) = sum lambda_i f(u_i) when sum lambda = 1.
  NonMembershipCondition c;
  for (const auto& f : sys.facets) {
    StrictInequality b;
    b.coefficients.reserve(p.num_vertices());
    for (const auto& u : p.vertices()) b.coefficients.emplace_back(f.evaluate(u));
    b.offset = 0;
    b = b.normalized();
    if (prune) {
      const StrictInequality one[] = {b};
      if (!lp::strict_feasibility(one, p.dim()).feasible) continue;
    }
    c.branches.push_back(std::move(b));
  }
  return c;
}

Dilation explicit_dilation(const LatticeSimplex& p, const Integer& k, std::vector<LatticeVector> vertices,
                           bool prune) {
  if (k < 2) throw PreconditionError("dilation modulus must be at least 2");
  if (vertices.size() != p.num_vertices())
    throw PreconditionError("explicit dilation needs " + std::to_string(p.num_vertices()) + " vertices");
  for (const auto& v : vertices)
    if (v.size() != p.dim()) throw PreconditionError("explicit dilation vertex has wrong dimension");
  if (!is_k_dilation(vertices, k))
    throw PreconditionError("explicit dilation vertices are not congruent modulo " + k.get_str());
  const FacetSystem parent = facet_system(p);
  for (const auto& v : vertices)
    if (!parent.contains(v)) throw PreconditionError("explicit dilation vertex lies outside the parent simplex");
  auto condition = explicit_nonmembership(p, vertices, prune);  // throws DegenerateError when flat
  ExplicitSpec spec{k, vertices};
  return Dilation(std::move(spec), std::move(vertices), k, p, std::move(condition));
}

Dilation make_dilation(const LatticeSimplex& p, const DilationSpec& spec) {
  if (const auto* a = std::get_if<ApexSpec>(&spec)) return translate_dilation(p, a->apex, a->modulus, a->translation);
  const auto& e = std::get<ExplicitSpec>(spec);
  return explicit_dilation(p, e.modulus, e.vertices);
}

bool dilation_contains(const Dilation& d, const BarycentricCoords& lambda) {
  if (lambda.lambda.size() != d.parent().num_vertices()) throw PreconditionError("barycentric dimension mismatch");
  if (!lambda.in_simplex()) return false;
  return !d.nonmembership().holds(lambda.lambda);
}

}  // namespace latcover
