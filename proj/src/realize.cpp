#include "latcover/strategy.hpp"

#include <random>

namespace latcover {

namespace {

// x = a (mod m) and x = b (mod n), merged; false when incompatible.
bool crt_merge(Integer& a, Integer& m, const Integer& b, const Integer& n) {
  const Integer g = gcd_of(m, n);
  if ((b - a) % g != 0) return false;
  const Integer mg = m / g, ng = n / g;
  Integer inv;
  if (ng == 1) {
    inv = 0;
  } else {
    mpz_invert(inv.get_mpz_t(), mg.get_mpz_t(), ng.get_mpz_t());
  }
  const Integer t = mod_floor((b - a) / g * inv, ng);
  a = a + m * t;
  m = m * ng;
  a = mod_floor(a, m);
  return true;
}

// Representative of a mod m in (-m/2, m/2].
Integer centred(const Integer& a, const Integer& m) {
  Integer r = mod_floor(a, m);
  if (2 * r > m) r -= m;
  return r;
}

}  // namespace

bool profile_gcd_consistent(const EdgeLengthMatrix& l) {
  const std::size_t n = l.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (i != j && i != k && l(j, k) % gcd_of(l(i, j), l(i, k)) != 0) return false;
  return true;
}

// u_0 = 0; each later vertex solves u_j = u_i (mod l_ij) for all i < j
// coordinate-wise, then a random multiple of the combined modulus is added.
// The exact gcds and full dimension are checked before a vertex is accepted.
std::optional<LatticeSimplex> realize_edge_profile(const EdgeLengthMatrix& lengths, std::size_t dim,
                                                   std::size_t trials, std::uint64_t seed) {
  if (lengths.size() != dim + 1)
    throw PreconditionError("realize_edge_profile: matrix size " + std::to_string(lengths.size()) +
                            " does not match dimension " + std::to_string(dim));
  if (!profile_gcd_consistent(lengths)) return std::nullopt;
  std::mt19937_64 rng(seed);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    const long radius = 1 + static_cast<long>(trial / 8);
    std::uniform_int_distribution<long> pick(-radius, radius);
    std::vector<LatticeVector> u{LatticeVector(dim, Integer(0))};
    bool ok = true;
    for (std::size_t j = 1; j <= dim && ok; ++j) {
      LatticeVector base(dim);
      Integer modulus = 1;
      for (std::size_t c = 0; c < dim && ok; ++c) {
        Integer a = 0, m = 1;
        for (std::size_t i = 0; i < j && ok; ++i) ok = crt_merge(a, m, u[i][c], lengths(i, j));
        modulus = m;
        base[c] = centred(a, m);
      }
      if (!ok) break;
      bool placed = false;
      for (int attempt = 0; attempt < 32 && !placed; ++attempt) {
        LatticeVector cand = base;
        for (std::size_t c = 0; c < dim; ++c) cand[c] += modulus * Integer(pick(rng));
        bool exact = true;
        for (std::size_t i = 0; i < j && exact; ++i) exact = cand != u[i] && lattice_length(u[i], cand) == lengths(i, j);
        if (!exact) continue;
        linalg::Matrix diffs;
        for (std::size_t i = 1; i < j; ++i) diffs.push_back(to_rational(u[i] - u[0]));
        diffs.push_back(to_rational(cand - u[0]));
        if (linalg::rank(diffs) != j) continue;
        u.push_back(std::move(cand));
        placed = true;
      }
      ok = placed;
    }
    if (ok) return LatticeSimplex(std::move(u));
  }
  return std::nullopt;
}

}  // namespace latcover
