// latcover: covers of lattice simplices by dilations.
//
// Exit codes: 0 success / covered, 1 not covered or budget exhausted,
// 2 invalid input, 3 internal error.

#include "latcover/closure.hpp"
#include "latcover/io.hpp"
#include "latcover/strategy.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

using namespace latcover;

namespace {

constexpr int kOk = 0, kNotCovered = 1, kInvalid = 2, kInternal = 3;

unsigned default_threads() {
  if (const char* env = std::getenv("LATCOVER_THREADS")) {
    const long t = std::strtol(env, nullptr, 10);
    if (t > 0) return static_cast<unsigned>(t);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string lambda_str(const std::vector<Rational>& lambda) {
  std::string s = "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) s += (i ? ", " : "") + lambda[i].get_str();
  return s + ")";
}

void print_certificate(const Certificate& cert) {
  if (cert.covered) {
    std::cout << "certificate: Covered (" << cert.branches_checked << " LP solves)\n";
    return;
  }
  std::cout << "certificate: Witness " << lambda_str(cert.witness.lambda) << "\n";
  std::cout << "branches:";
  for (std::size_t b : cert.branch) std::cout << ' ' << b;
  std::cout << "\n";
}

void print_matrix(const EdgeLengthMatrix& l) {
  std::cout << "edge lengths:\n";
  for (const auto& row : l.rows()) {
    std::cout << " ";
    for (const auto& x : row) std::cout << ' ' << x;
    std::cout << "\n";
  }
}

int report_exit(const StrategyReport& r) {
  std::cout << "case: " << to_string(r.case_tag) << "\n";
  std::cout << "dilations: " << r.cover.size() << "\n";
  print_certificate(r.certificate);
  return r.certificate.covered ? kOk : kNotCovered;
}

struct Args {
  std::string simplex, cover, out, csv, sampler = "normalized-cube", seeds;
  long k = 0;
  std::uint64_t samples = 1'000'000, seed = 42;
  std::size_t rmax = 2, max_points = 200'000, rounds = 64;
  bool force = false;
  unsigned threads = 0;
};

int cmd_analyze(const Args& a) {
  const auto p = io::read_simplex(a.simplex);
  const auto l = edge_length_matrix(p);
  print_matrix(l);
  std::cout << "l(P): " << l.min_length() << "\n";
  const long n = static_cast<long>(p.dim());
  if (l.min_length() < std::max(2L, n - 1))
    std::cout << "warning: l(P) < max(2, n-1); the covering hypotheses do not hold\n";
  const Integer k = a.k > 0 ? Integer(a.k) : Integer(std::max(2L, n - 1));
  if (k < 2 || k > l.min_length()) {
    std::cout << "A table: unavailable for k = " << k << " (needs 2 <= k <= l(P))\n";
    return kOk;
  }
  const auto t = a_coefficients(p, k);
  std::cout << "A (k = " << k << "):";
  for (const auto& q : t.a) std::cout << ' ' << q.get_str();
  std::cout << "\n";
  return kOk;
}

int write_cover_out(const Args& a, const Cover& c) {
  if (a.out.empty()) return kOk;
  io::write_file(a.out, io::cover_json(c));
  std::cout << "wrote " << a.out << "\n";
  return kOk;
}

int cmd_cover(const Args& a) {
  const auto p = io::read_simplex(a.simplex);
  if (p.dim() != 3 && p.dim() != 4) {
    std::cerr << "error: unsupported dimension " << p.dim() << " (expected 3 or 4)\n";
    return kInvalid;
  }
  const auto l = edge_length_matrix(p);
  const long need = p.dim() == 3 ? 2 : 3;
  SearchBudget budget;
  budget.max_rounds = a.rounds;
  budget.seed = a.seed;
  if (l.min_length() < need) {
    if (!a.force) {
      std::cerr << "error: l(P) = " << l.min_length() << " < " << need << "; pass --force to search anyway\n";
      return kInvalid;
    }
    std::vector<Dilation> base;
    for (std::size_t i = 0; i < p.num_vertices(); ++i)
      if (l.min_length_at(i) >= need) base.push_back(build_apex_dilation(p, i, need));
    if (base.empty()) {
      std::cerr << "error: no vertex admits an apex " << need << "-dilation\n";
      return kInvalid;
    }
    const auto r = search_supplementary(p, need, Cover(p, std::move(base)), budget);
    write_cover_out(a, r.cover);
    return report_exit(r);
  }
  if (p.dim() == 4) {
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j)
        if (l(i, j) == 5) std::cout << "warning: edge " << i << j << " has lattice length 5; using search\n";
  }
  const auto r = cover_simplex(p, budget);
  write_cover_out(a, r.cover);
  return report_exit(r);
}

int cmd_certify(const Args& a) {
  const auto p = io::read_simplex(a.simplex);
  const auto c = io::read_cover(a.cover, p);
  const auto cert = certify(c);
  print_certificate(cert);
  return cert.covered ? kOk : kNotCovered;
}

int cmd_sample(const Args& a) {
  const auto p = io::read_simplex(a.simplex);
  const auto c = io::read_cover(a.cover, p);
  MonteCarloOptions opt;
  opt.sampler = sampling::parse_sampler(a.sampler);
  opt.threads = a.threads;
  opt.trace_every = 10'000;
  std::ofstream file;
  if (!a.csv.empty()) {
    file.open(a.csv);
    if (!file) throw Error(a.csv + ": cannot write file");
  }
  std::ostream& csv = a.csv.empty() ? std::cout : file;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
  opt.trace = [&](std::uint64_t s, std::uint64_t u) { rows.emplace_back(s, u); };
  const auto r = monte_carlo_uncovered(c, a.samples, a.seed, opt);
  std::cout << "sampler: " << sampling::to_string(opt.sampler) << "\n";
  std::cout << "samples: " << r.samples << "\nuncovered: " << r.uncovered << "\nrate: " << r.rate
            << "\nstderr: " << r.stderr_rate << "\n";
  csv << "samples,uncovered_count,rate\n";
  for (const auto& [s, u] : rows)
    csv << s << ',' << u << ',' << static_cast<double>(u) / static_cast<double>(s) << "\n";
  return r.uncovered == 0 ? kOk : kNotCovered;
}

int cmd_closure(const Args& a) {
  const auto p = io::read_simplex(a.simplex);
  ClosureBudget b;
  b.max_points = a.max_points;
  b.threads = a.threads;
  const auto r = is_integrally_closed_up_to(p, a.rmax, b);
  std::cout << "lattice points of rP:";
  for (std::size_t i = 0; i < r.counts.size(); ++i) std::cout << " r=" << i + 1 << ":" << r.counts[i];
  std::cout << "\n";
  for (const auto& f : r.failures) {
    std::cout << "failure r=" << f.r << ": (";
    for (std::size_t i = 0; i < f.point.size(); ++i) std::cout << (i ? "," : "") << f.point[i];
    std::cout << ") in " << f.r + 1 << "P is not a sum\n";
  }
  if (r.closed()) {
    std::cout << "integrally closed up to r = " << r.r_max << "\n";
    return kOk;
  }
  std::cout << "not integrally closed: " << r.failure_count << " missing points\n";
  return kNotCovered;
}

int cmd_search(const Args& a) {
  const auto p = io::read_simplex(a.simplex);
  const Integer k = a.k > 0 ? Integer(a.k) : Integer(std::max<long>(2, static_cast<long>(p.dim()) - 1));
  std::vector<Dilation> base;
  if (!a.cover.empty()) {
    base = io::read_cover(a.cover, p).dilations();
  } else {
    for (std::size_t i = 0; i < p.num_vertices(); ++i) base.push_back(build_apex_dilation(p, i, k));
  }
  std::vector<Dilation> seeds;
  if (!a.seeds.empty()) seeds = io::read_cover(a.seeds, p).dilations();
  SearchBudget budget;
  budget.max_rounds = a.rounds;
  budget.seed = a.seed;
  const auto r = search_supplementary(p, k, Cover(p, std::move(base)), budget, seeds);
  if (a.out.empty()) {
    std::cout << io::cover_json(r.cover);
  } else {
    write_cover_out(a, r.cover);
  }
  std::cout << "added: " << r.added << "\n";
  return report_exit(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covers of lattice simplices by dilations of lattice simplices"};
  app.require_subcommand(1);
  Args a;
  a.threads = default_threads();
  app.add_option("--threads", a.threads, "Worker threads (default: $LATCOVER_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  auto* analyze = app.add_subcommand("analyze", "Edge lengths, l(P) and the A table");
  analyze->add_option("simplex", a.simplex)->required();
  analyze->add_option("--k", a.k, "Modulus (default n-1)");

  auto* cover = app.add_subcommand("cover", "Construct and certify a cover");
  cover->add_option("simplex", a.simplex)->required();
  cover->add_option("--out", a.out, "Write the cover file here");
  cover->add_flag("--force", a.force, "Search even when l(P) is too small");
  cover->add_option("--rounds", a.rounds, "Search rounds budget")->check(CLI::PositiveNumber);
  cover->add_option("--seed", a.seed);

  auto* cert = app.add_subcommand("certify", "Exact coverage decision");
  cert->add_option("simplex", a.simplex)->required();
  cert->add_option("cover", a.cover)->required();

  auto* sample = app.add_subcommand("sample", "Monte Carlo estimate of the uncovered fraction");
  sample->add_option("simplex", a.simplex)->required();
  sample->add_option("cover", a.cover)->required();
  sample->add_option("-n", a.samples, "Number of samples")->check(CLI::PositiveNumber);
  sample->add_option("--seed", a.seed);
  sample->add_option("--sampler", a.sampler, "normalized-cube (default) or uniform");
  sample->add_option("--csv", a.csv, "Write the running estimate here instead of stdout");

  auto* closure = app.add_subcommand("closure", "Brute-force integral closedness up to r_max");
  closure->add_option("simplex", a.simplex)->required();
  closure->add_option("--rmax", a.rmax)->check(CLI::PositiveNumber);
  closure->add_option("--budget", a.max_points, "Lattice points allowed per dilate")->check(CLI::PositiveNumber);

  auto* search = app.add_subcommand("search", "Add k-dilations until certified");
  search->add_option("simplex", a.simplex)->required();
  search->add_option("-k", a.k, "Modulus (default max(2, n-1))");
  search->add_option("--cover", a.cover, "Base cover (default: apex k-dilations)");
  search->add_option("--seeds", a.seeds, "Cover file of candidate dilations tried first");
  search->add_option("--budget", a.rounds, "Search rounds")->check(CLI::PositiveNumber);
  search->add_option("--seed", a.seed);
  search->add_option("--out", a.out, "Write the augmented cover here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*analyze) return cmd_analyze(a);
    if (*cover) return cmd_cover(a);
    if (*cert) return cmd_certify(a);
    if (*sample) return cmd_sample(a);
    if (*closure) return cmd_closure(a);
    if (*search) return cmd_search(a);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const DegenerateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kNotCovered;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInvalid;
}
