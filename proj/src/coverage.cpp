#include "latcover/coverage.hpp"

#include "latcover/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace latcover {

Cover::Cover(LatticeSimplex parent, std::vector<Dilation> dilations)
    : parent_(std::move(parent)), dilations_(std::move(dilations)) {
  if (dilations_.empty()) throw PreconditionError("a cover needs at least one dilation");
  for (const auto& d : dilations_)
    if (!(d.parent() == parent_)) throw PreconditionError("dilation belongs to a different simplex");
}

void Cover::add(Dilation d) {
  if (!(d.parent() == parent_)) throw PreconditionError("dilation belongs to a different simplex");
  dilations_.push_back(std::move(d));
}

bool ACoefficients::all_nonnegative() const {
  return std::all_of(a.begin(), a.end(), [](const Rational& q) { return sgn(q) >= 0; });
}

std::optional<std::size_t> ACoefficients::first_negative() const {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) < 0) return i;
  return std::nullopt;
}

ACoefficients a_coefficients(const LatticeSimplex& p, const Integer& k) {
  const auto l = edge_length_matrix(p);
  if (k < 2 || k > l.min_length())
    throw PreconditionError("a_coefficients: modulus " + k.get_str() + " outside [2, l(P) = " +
                            l.min_length().get_str() + "]");
  ACoefficients out{k, std::vector<Rational>(p.num_vertices(), Rational(1))};
  for (std::size_t i = 0; i < p.num_vertices(); ++i)
    for (std::size_t j = 0; j < p.num_vertices(); ++j)
      if (j != i) out.a[i] -= apex_fraction(l(j, i), k);
  return out;
}

// ---------------------------------------------------------------------------
// Certification

namespace {

bool single_row_feasible(const StrictInequality& row, std::size_t dim) {
  const StrictInequality one[] = {row};
  return lp::strict_feasibility(one, dim).feasible;
}

std::vector<std::vector<StrictInequality>> branch_lists(const Cover& cover, const CertifyOptions& options) {
  std::vector<std::vector<StrictInequality>> lists;
  lists.reserve(cover.size());
  for (const auto& d : cover.dilations()) {
    std::vector<StrictInequality> kept;
    for (const auto& b : d.nonmembership().branches)
      if (!options.prune_branches || single_row_feasible(b, cover.parent().dim())) kept.push_back(b);
    lists.push_back(std::move(kept));
  }
  return lists;
}

bool strictly_satisfies(const std::vector<StrictInequality>& rows, const std::vector<Rational>& lambda) {
  return std::all_of(rows.begin(), rows.end(), [&](const StrictInequality& r) { return r.holds(lambda); });
}

// Moves a witness toward the centroid while every row stays strict, so that
// the reported point is interior to P.
std::vector<Rational> interiorize(const std::vector<StrictInequality>& rows, std::vector<Rational> lambda) {
  const std::size_t n = lambda.size();
  const Rational centre = make_rational(1, static_cast<long>(n));
  Rational delta = make_rational(1, 2);
  for (int iter = 0; iter < 256; ++iter) {
    std::vector<Rational> cand(n);
    for (std::size_t i = 0; i < n; ++i) cand[i] = (1 - delta) * lambda[i] + delta * centre;
    if (strictly_satisfies(rows, cand)) return cand;
    delta /= 2;
  }
  return lambda;
}

struct Search {
  const std::vector<std::vector<StrictInequality>>& lists;
  std::size_t dim;
  const CertifyOptions& options;
  std::size_t checked = 0;
  std::vector<std::size_t> choice;
  std::vector<StrictInequality> rows;
  std::vector<Rational> witness;

  // Depth-first over the product; `lambda` strictly satisfies `rows` so far.
  bool descend(std::size_t depth, const std::vector<Rational>& lambda) {
    if (depth == lists.size()) {
      witness = lambda;
      return true;
    }
    for (std::size_t b = 0; b < lists[depth].size(); ++b) {
      rows.push_back(lists[depth][b]);
      choice.push_back(b);
      std::vector<Rational> next;
      if (!lambda.empty() && rows.back().holds(lambda)) {
        next = lambda;
      } else {
        ++checked;
        if (checked > options.max_lp_solves) throw BudgetError("certify: LP solve budget exhausted");
        const auto r = lp::strict_feasibility(rows, dim);
        if (r.feasible) next = r.witness;
      }
      if (!next.empty() && descend(depth + 1, next)) return true;
      rows.pop_back();
      choice.pop_back();
    }
    return false;
  }
};

}  // namespace

std::vector<BranchSystem> noncoverage_dnf(const Cover& cover, const CertifyOptions& options) {
  const auto lists = branch_lists(cover, options);
  Integer count = 1;
  for (const auto& l : lists) count *= static_cast<unsigned long>(l.size());
  if (sgn(count) == 0) return {};
  if (count > static_cast<unsigned long>(options.max_branches))
    throw BudgetError("noncoverage_dnf: " + count.get_str() + " branches exceed the cap of " +
                      std::to_string(options.max_branches));
  const std::size_t total = count.get_ui();
  std::vector<BranchSystem> out;
  out.reserve(total);
  std::vector<std::size_t> idx(lists.size(), 0);
  while (true) {
    BranchSystem sys;
    sys.reserve(lists.size());
    for (std::size_t d = 0; d < lists.size(); ++d) sys.push_back(lists[d][idx[d]]);
    out.push_back(std::move(sys));
    std::size_t d = lists.size();
    while (d > 0) {
      --d;
      if (++idx[d] < lists[d].size()) break;
      idx[d] = 0;
      if (d == 0) return out;
    }
  }
}

Certificate certify(const Cover& cover, const CertifyOptions& options) {
  const std::size_t dim = cover.parent().dim();
  Certificate cert;
  std::vector<Rational> witness;
  std::vector<StrictInequality> rows;

  if (options.prune_prefixes) {
    const auto lists = branch_lists(cover, options);
    Search s{lists, dim, options, 0, {}, {}, {}};
    const bool found = s.descend(0, {});
    cert.branches_checked = s.checked;
    if (found) {
      witness = s.witness;
      rows = s.rows;
      cert.branch = s.choice;
    }
  } else {
    const auto lists = branch_lists(cover, options);
    const auto dnf = noncoverage_dnf(cover, options);
    std::vector<std::size_t> idx(lists.size(), 0);
    for (const auto& sys : dnf) {
      ++cert.branches_checked;
      const auto r = lp::strict_feasibility(sys, dim);
      if (r.feasible) {
        witness = r.witness;
        rows = sys;
        cert.branch = idx;
        break;
      }
      for (std::size_t d = lists.size(); d-- > 0;) {
        if (++idx[d] < lists[d].size()) break;
        idx[d] = 0;
      }
    }
  }

  if (witness.empty()) {
    cert.covered = true;
    return cert;
  }
  cert.witness.lambda = interiorize(rows, witness);
  for (const auto& d : cover.dilations())
    if (dilation_contains(d, cert.witness))
      throw InternalError("certify: witness lies inside a dilation of the cover");
  return cert;
}

// ---------------------------------------------------------------------------
// Monte Carlo

bool CompiledCover::Row::holds(std::span<const std::int64_t> m) const {
  if (narrow) {
    __int128 s = 0;
    for (std::size_t j = 0; j < a64.size(); ++j) s += static_cast<__int128>(a64[j]) * m[j];
    return s < c128;
  }
  Integer s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * Integer(static_cast<long>(m[j]));
  return s < c_scaled;
}

CompiledCover::CompiledCover(const Cover& cover) {
  static const Integer limit = Integer(1) << 62;
  for (const auto& d : cover.dilations()) {
    std::vector<Row> branches;
    for (const auto& b : d.nonmembership().branches) {
      Integer den = b.offset.get_den();
      for (const auto& q : b.coefficients) den = lcm_of(den, q.get_den());
      Row r;
      bool narrow = true;
      for (const auto& q : b.coefficients) {
        r.a.push_back(q.get_num() * (den / q.get_den()));
        if (abs(r.a.back()) >= limit) narrow = false;
      }
      const Integer c = b.offset.get_num() * (den / b.offset.get_den());
      r.c_scaled = c << sampling::kDyadicBits;
      if (abs(c) >= limit) narrow = false;
      if (narrow) {
        for (const auto& z : r.a) r.a64.push_back(z.get_si());
        r.c128 = static_cast<__int128>(c.get_si()) << sampling::kDyadicBits;
      }
      r.narrow = narrow;
      branches.push_back(std::move(r));
    }
    rows_.push_back(std::move(branches));
  }
}

bool CompiledCover::contains(std::size_t dilation, std::span<const std::int64_t> m) const {
  for (const auto& r : rows_[dilation])
    if (r.holds(m)) return false;
  return true;
}

bool CompiledCover::uncovered(std::span<const std::int64_t> m) const {
  for (std::size_t d = 0; d < rows_.size(); ++d)
    if (contains(d, m)) return false;
  return true;
}

MonteCarloResult monte_carlo_uncovered(const Cover& cover, std::uint64_t samples, std::uint64_t seed,
                                       const MonteCarloOptions& options) {
  if (samples == 0) throw PreconditionError("monte_carlo_uncovered: need at least one sample");
  const CompiledCover compiled(cover);
  const std::size_t parts = cover.parent().num_vertices();

  // Chunks of fixed size; per-chunk counts are summed in index order, so the
  // result does not depend on the thread count.
  const std::uint64_t chunk = options.trace_every > 0 ? options.trace_every : 10'000;
  const std::uint64_t nchunks = (samples + chunk - 1) / chunk;
  std::vector<std::uint64_t> hits(nchunks, 0);
  auto work = [&](std::uint64_t first_chunk, std::uint64_t stride) {
    for (std::uint64_t c = first_chunk; c < nchunks; c += stride) {
      const std::uint64_t lo = c * chunk, hi = std::min(samples, lo + chunk);
      std::uint64_t h = 0;
      for (std::uint64_t s = lo; s < hi; ++s)
        if (compiled.uncovered(sampling::dyadic_simplex_point(seed, s, parts, options.sampler))) ++h;
      hits[c] = h;
    }
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }

  MonteCarloResult r;
  r.samples = samples;
  for (std::uint64_t c = 0; c < nchunks; ++c) {
    r.uncovered += hits[c];
    if (options.trace) options.trace(std::min(samples, (c + 1) * chunk), r.uncovered);
  }
  r.rate = static_cast<double>(r.uncovered) / static_cast<double>(samples);
  r.stderr_rate = std::sqrt(r.rate * (1 - r.rate) / static_cast<double>(samples));
  return r;
}

}  // namespace latcover
