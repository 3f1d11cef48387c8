#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace latcover;
using fx::V;

TEST_SUITE("lattice") {

TEST_CASE("lattice length") {
  CHECK(lattice_length(V({5, 0, 0, 0}), V({0, 60, 0, 0})) == 5);
  CHECK(lattice_length(V({0, 0, 0, 0}), V({8, 24, 12, 0})) == 4);
  CHECK(lattice_length(V({0, 0}), V({1, 0})) == 1);
  CHECK_THROWS_AS(lattice_length(V({1, 2}), V({1, 2})), DegenerateError);
}

TEST_CASE("lattice length properties") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int it = 0; it < 200; ++it) {
    LatticeVector a{c(rng), c(rng), c(rng)}, b{c(rng), c(rng), c(rng)};
    if (a == b) continue;
    const Integer l = lattice_length(a, b);
    CHECK(l == lattice_length(b, a));
    const LatticeVector s{c(rng), c(rng), c(rng)};
    CHECK(l == lattice_length(a + s, b + s));
    CHECK(lattice_length(Integer(3) * a, Integer(3) * b) == 3 * l);
    const std::vector<RationalPoint> seg{to_rational(a), to_rational(b)};
    CHECK(lattice_points(seg).size() == l + 1);
  }
}

TEST_CASE("edge length matrix") {
  const auto l = edge_length_matrix(fx::pentatope());
  CHECK(l == fx::profile(fx::pentatope_lengths()));
  CHECK(l.min_length() == 3);
  CHECK(edge_length_matrix(fx::unit_simplex(3)).min_length() == 1);
  const auto l2 = edge_length_matrix(fx::unit_simplex(3, 2));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) CHECK(l2(i, j) == 2);
}

TEST_CASE("simplex validation") {
  CHECK_THROWS_AS(LatticeSimplex({V({0, 0}), V({1, 1}), V({2, 2})}), DegenerateError);
  CHECK_THROWS_AS(LatticeSimplex({V({0, 0}), V({1, 0}), V({0, 1, 0})}), PreconditionError);
}

TEST_CASE("primitive direction") {
  const auto p = fx::pentatope();
  CHECK(primitive_direction(p, 0, 4) == V({7, 6, 18, 15}));
  CHECK(primitive_direction(p, 2, 1) == V({0, 1, 0, 0}));
  CHECK(primitive_direction(fx::unit_simplex(3), 0, 1) == V({1, 0, 0}));
  CHECK_THROWS(primitive_direction(p, 1, 1));
  const auto l = edge_length_matrix(p);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      if (i == j) continue;
      const auto d = primitive_direction(p, i, j);
      Integer g = 0;
      for (const auto& x : d) g = gcd_of(g, x);
      CHECK(g == 1);
      CHECK(l(i, j) * d == p.vertex(j) - p.vertex(i));
    }
}

TEST_CASE("barycentric coordinates") {
  const auto p = fx::pentatope();
  CHECK(p.to_barycentric(to_rational(p.vertex(0))).lambda == fx::L({{1, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}}));
  RationalPoint centroid(4, Rational(0));
  for (const auto& u : p.vertices())
    for (std::size_t c = 0; c < 4; ++c) centroid[c] += Rational(u[c]) / 5;
  CHECK(p.to_barycentric(centroid).lambda == std::vector<Rational>(5, make_rational(1, 5)));
  CHECK(p.to_barycentric(to_rational(V({2, 0, 0, 0}))).lambda ==
        fx::L({{2, 5}, {0, 1}, {3, 5}, {0, 1}, {0, 1}}));

  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    BarycentricCoords b{oracle::random_lambda(rng, 5)};
    CHECK(p.to_barycentric(p.from_barycentric(b)) == b);
  }
}

TEST_CASE("facet system") {
  const std::vector<RationalPoint> tri{to_rational(V({0, 0})), to_rational(V({1, 0})), to_rational(V({0, 1}))};
  const auto f = facet_system(tri);
  REQUIRE(f.facets.size() == 3);
  CHECK(f.facets[0] == AffineFunctional{V({-1, -1}), 1});
  CHECK(f.facets[1] == AffineFunctional{V({1, 0}), 0});
  CHECK(f.facets[2] == AffineFunctional{V({0, 1}), 0});

  const auto p = fx::pentatope();
  const auto fs = facet_system(p);
  for (std::size_t v = 0; v < 5; ++v) {
    int zeros = 0;
    for (std::size_t i = 0; i < 5; ++i) zeros += fs.facets[i].evaluate(p.vertex(v)) == 0;
    CHECK(zeros == 4);
    CHECK(fs.facets[v].evaluate(p.vertex(v)) > 0);
  }
  for (const auto& g : fs.facets) {
    Integer c = g.offset;
    for (const auto& x : g.normal) c = gcd_of(c, x);
    CHECK(c == 1);
  }
}

TEST_CASE("facet membership agrees with barycentric sign") {
  const auto p = fx::pentatope();
  const auto fs = facet_system(p);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-40, 800), den(1, 13);
  int in = 0;
  for (int it = 0; it < 1000; ++it) {
    RationalPoint x;
    for (std::size_t c = 0; c < 4; ++c) x.push_back(make_rational(num(rng) % 75, den(rng)));
    const bool a = fs.contains(x), b = p.to_barycentric(x).in_simplex();
    CHECK(a == b);
    CHECK(a == oracle::inside(p.vertices(), x));
    in += a;
  }
  CHECK(in > 0);
}

TEST_CASE("lattice points") {
  const std::vector<RationalPoint> tri{to_rational(V({0, 0})), to_rational(V({1, 0})), to_rational(V({0, 1}))};
  CHECK(lattice_points(tri) == std::vector<LatticeVector>{V({0, 0}), V({0, 1}), V({1, 0})});
  const std::vector<RationalPoint> seg{to_rational(V({0, 0, 0, 0})), to_rational(V({8, 24, 12, 0}))};
  CHECK(lattice_points(seg).size() == 5);
  CHECK(lattice_points(fx::unit_simplex(2, 2)).size() == 6);
  CHECK(lattice_points(fx::pentatope()).size() == 10624);

  EnumerationBudget tiny;
  tiny.max_points = 10;
  CHECK_THROWS_AS(lattice_points(fx::pentatope(), tiny), BudgetError);
}

TEST_CASE("lattice points match a box scan") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> c(-4, 4);
  for (int it = 0; it < 30; ++it) {
    std::vector<LatticeVector> v;
    for (int i = 0; i < 4; ++i) v.push_back(V({c(rng), c(rng), c(rng)}));
    try {
      const LatticeSimplex p(v);
      auto expect = oracle::box_points(v);
      std::sort(expect.begin(), expect.end());
      CHECK(lattice_points(p) == expect);
    } catch (const DegenerateError&) {
    }
  }
}

TEST_CASE("permutation") {
  const auto p = fx::pentatope();
  const std::size_t perm[] = {4, 3, 2, 1, 0};
  const auto q = p.permuted(perm);
  CHECK(q.vertex(0) == p.vertex(4));
  CHECK(edge_length_matrix(q) == edge_length_matrix(p).permuted(perm));
}

}
