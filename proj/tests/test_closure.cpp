#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "latcover/closure.hpp"

#include <cstdlib>

using namespace latcover;
using fx::V;

TEST_SUITE("closure") {

TEST_CASE("lattice triangles are closed") {
  std::mt19937_64 rng(81);
  std::uniform_int_distribution<long> c(0, 12);
  int done = 0;
  while (done < 50) {
    try {
      const LatticeSimplex p({V({c(rng), c(rng)}), V({c(rng), c(rng)}), V({c(rng), c(rng)})});
      const auto r = is_integrally_closed_up_to(p, 4);
      CHECK(r.closed());
      CHECK(r.counts.size() == 5);
      ++done;
    } catch (const DegenerateError&) {
    }
  }
}

TEST_CASE("scaled unimodular simplex") {
  const auto r = is_integrally_closed_up_to(fx::unit_simplex(3, 2), 3);
  CHECK(r.closed());
  // #(rP ∩ M) for P = 2 * unit simplex: binom(2r + 3, 3).
  CHECK(r.counts == std::vector<std::size_t>{10, 35, 84, 165});
}

TEST_CASE("a non-closed simplex") {
  const std::vector<LatticeVector> v{V({0, 0, 0}), V({1, 0, 0}), V({0, 1, 0}), V({1, 1, 3})};
  REQUIRE_FALSE(oracle::closed_at(v, 1));
  const auto r = is_integrally_closed_up_to(LatticeSimplex(v), 1);
  CHECK_FALSE(r.closed());
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures[0].r == 1);
  CHECK(r.failures[0].point == V({1, 1, 1}));
}

TEST_CASE("agrees with the oracle on small simplices") {
  std::mt19937_64 rng(83);
  std::uniform_int_distribution<long> c(0, 3);
  int done = 0;
  while (done < 12) {
    std::vector<LatticeVector> v;
    for (int i = 0; i < 4; ++i) v.push_back(V({c(rng), c(rng), c(rng)}));
    try {
      const LatticeSimplex p(v);
      const auto r = is_integrally_closed_up_to(p, 1);
      CHECK(r.closed() == oracle::closed_at(v, 1));
      for (std::size_t s = 1; s <= 2; ++s) CHECK(r.counts[s - 1] == oracle::box_points(oracle::scale(v, s)).size());
      CHECK(r.counts[0] <= r.counts[1]);
      ++done;
    } catch (const DegenerateError&) {
    }
  }
}

TEST_CASE("thread count does not change the result") {
  const std::vector<LatticeVector> v{V({0, 0, 0}), V({1, 0, 0}), V({0, 1, 0}), V({1, 1, 5})};
  ClosureBudget one, four;
  four.threads = 4;
  const auto a = is_integrally_closed_up_to(LatticeSimplex(v), 2, one);
  const auto b = is_integrally_closed_up_to(LatticeSimplex(v), 2, four);
  CHECK(a.failure_count == b.failure_count);
  CHECK(a.counts == b.counts);
}

TEST_CASE("preconditions and budget") {
  CHECK_THROWS_AS(is_integrally_closed_up_to(fx::unit_simplex(2), 0), PreconditionError);
  ClosureBudget tiny;
  tiny.max_points = 100;
  CHECK_THROWS_AS(is_integrally_closed_up_to(fx::pentatope(), 1, tiny), BudgetError);
}

TEST_CASE("covered simplices are closed") {
  const auto r2 = cover_dim3(fx::unit_simplex(3, 2));
  CHECK(covered_implies_closed_check(r2, 3).closed());
  const auto fig2 = cover_dim3(fx::realize(fx::mixed_lengths()));
  CHECK(covered_implies_closed_check(fig2, 2).closed());
}

TEST_CASE("the pentatope is closed at r = 1" * doctest::skip(std::getenv("LATCOVER_EXPENSIVE") == nullptr)) {
  ClosureBudget b;
  b.max_points = 2'000'000;
  b.threads = 8;
  const auto r = is_integrally_closed_up_to(fx::pentatope(), 1, b);
  CHECK(r.closed());
  CHECK(r.counts[0] == 10624);
}

}
