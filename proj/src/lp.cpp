#include "latcover/lp.hpp"

#include <optional>

namespace latcover::lp {

namespace {

// Dense tableau in canonical form: rows_[i] . cols == rhs, basis_[i] is the
// basic column of row i. The reduced-cost row is kept alongside.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : t_(rows, std::vector<Rational>(cols + 1)), basis_(rows), cols_(cols) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  Rational& rhs(std::size_t r) { return t_[r][cols_]; }
  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  // Reduced costs d_j = c_j - c_B . column_j for maximising `cost`.
  std::vector<Rational> reduced_costs(const std::vector<Rational>& cost) const {
    std::vector<Rational> d(cost);
    for (std::size_t r = 0; r < t_.size(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t c = 0; c < cols_; ++c) d[c] -= cb * t_[r][c];
    }
    return d;
  }

  void pivot(std::size_t pr, std::size_t pc, std::vector<Rational>& d) {
    const Rational inv = 1 / t_[pr][pc];
    for (auto& v : t_[pr]) v *= inv;
    for (std::size_t r = 0; r < t_.size(); ++r) {
      if (r == pr || sgn(t_[r][pc]) == 0) continue;
      const Rational f = t_[r][pc];
      for (std::size_t c = 0; c <= cols_; ++c)
        if (sgn(t_[pr][c]) != 0) t_[r][c] -= f * t_[pr][c];
    }
    if (sgn(d[pc]) != 0) {
      const Rational f = d[pc];
      for (std::size_t c = 0; c < cols_; ++c)
        if (sgn(t_[pr][c]) != 0) d[c] -= f * t_[pr][c];
    }
    basis_[pr] = pc;
  }

  // Bland's rule. Returns false when unbounded.
  bool maximise(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    std::vector<Rational> d = reduced_costs(cost);
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t c = 0; c < cols_; ++c)
        if (allowed[c] && sgn(d[c]) > 0) {
          enter = c;
          break;
        }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < t_.size(); ++r) {
        if (sgn(t_[r][*enter]) <= 0) continue;
        Rational ratio = t_[r][cols_] / t_[r][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter, d);
    }
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

}  // namespace

bool satisfies(const Problem& problem, const std::vector<Rational>& x) {
  const std::size_t nv = problem.objective.size();
  if (x.size() != nv) return false;
  for (std::size_t j = 0; j < nv; ++j) {
    const Rational lb = problem.lower_bounds.empty() ? Rational(0) : problem.lower_bounds[j];
    if (x[j] < lb) return false;
  }
  for (const auto& c : problem.constraints) {
    Rational s = 0;
    for (std::size_t j = 0; j < nv; ++j) s += c.row[j] * x[j];
    if (c.relation == Relation::Equal ? s != c.rhs : s > c.rhs) return false;
  }
  return true;
}

Outcome solve(const Problem& problem) {
  const std::size_t nv = problem.objective.size();
  const std::size_t m = problem.constraints.size();
  if (!problem.lower_bounds.empty() && problem.lower_bounds.size() != nv)
    throw PreconditionError("lp::solve: lower bound count mismatch");
  for (const auto& c : problem.constraints)
    if (c.row.size() != nv) throw PreconditionError("lp::solve: constraint width mismatch");

  // Shift to y = x - lb >= 0 and orient every row with rhs >= 0.
  struct Row {
    std::vector<Rational> a;
    Rational b;
    int slack_sign;  // +1 slack, -1 surplus, 0 equality
  };
  std::vector<Row> rows;
  rows.reserve(m);
  std::size_t n_slack = 0, n_art = 0;
  for (const auto& c : problem.constraints) {
    Row r{c.row, c.rhs, c.relation == Relation::Equal ? 0 : 1};
    if (!problem.lower_bounds.empty())
      for (std::size_t j = 0; j < nv; ++j) r.b -= r.a[j] * problem.lower_bounds[j];
    if (sgn(r.b) < 0) {
      for (auto& v : r.a) v = -v;
      r.b = -r.b;
      r.slack_sign = -r.slack_sign;
    }
    if (r.slack_sign != 0) ++n_slack;
    if (r.slack_sign <= 0) ++n_art;
    rows.push_back(std::move(r));
  }

  const std::size_t cols = nv + n_slack + n_art;
  Tableau tab(m, cols);
  std::vector<bool> artificial(cols, false);
  for (std::size_t i = 0, s = nv, a = nv + n_slack; i < m; ++i) {
    for (std::size_t j = 0; j < nv; ++j) tab.at(i, j) = rows[i].a[j];
    tab.rhs(i) = rows[i].b;
    if (rows[i].slack_sign != 0) {
      tab.at(i, s) = rows[i].slack_sign;
      if (rows[i].slack_sign > 0) tab.basis()[i] = s;
      ++s;
    }
    if (rows[i].slack_sign <= 0) {
      tab.at(i, a) = 1;
      tab.basis()[i] = a;
      artificial[a] = true;
      ++a;
    }
  }

  std::vector<bool> all(cols, true);
  if (n_art > 0) {
    std::vector<Rational> phase1(cols);
    for (std::size_t c = 0; c < cols; ++c)
      if (artificial[c]) phase1[c] = -1;
    tab.maximise(phase1, all);
    Rational infeas = 0;
    for (std::size_t r = 0; r < tab.rows(); ++r)
      if (artificial[tab.basis()[r]]) infeas += tab.rhs(r);
    if (sgn(infeas) != 0) return {Status::Infeasible, 0, {}};
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t r = 0; r < tab.rows();) {
      if (!artificial[tab.basis()[r]]) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t c = 0; c < cols; ++c)
        if (!artificial[c] && sgn(tab.at(r, c)) != 0) {
          col = c;
          break;
        }
      if (col) {
        std::vector<Rational> dummy(cols);
        tab.pivot(r, *col, dummy);
        ++r;
      } else {
        tab.drop_row(r);
      }
    }
  }

  std::vector<Rational> cost(cols);
  for (std::size_t j = 0; j < nv; ++j) cost[j] = problem.objective[j];
  std::vector<bool> allowed(cols);
  for (std::size_t c = 0; c < cols; ++c) allowed[c] = !artificial[c];
  if (!tab.maximise(cost, allowed)) return {Status::Unbounded, 0, {}};

  Outcome out;
  out.status = Status::Optimal;
  out.point.assign(nv, Rational(0));
  for (std::size_t r = 0; r < tab.rows(); ++r)
    if (tab.basis()[r] < nv) out.point[tab.basis()[r]] = tab.rhs(r);
  if (!problem.lower_bounds.empty())
    for (std::size_t j = 0; j < nv; ++j) out.point[j] += problem.lower_bounds[j];
  out.value = 0;
  for (std::size_t j = 0; j < nv; ++j) out.value += problem.objective[j] * out.point[j];
  if (!satisfies(problem, out.point)) throw InternalError("lp::solve: optimal point violates a constraint");
  return out;
}

StrictResult strict_feasibility(std::span<const StrictInequality> rows, std::size_t simplex_dim) {
  const std::size_t nl = simplex_dim + 1;
  const std::size_t eps = nl;
  Problem p;
  p.objective.assign(nl + 1, Rational(0));
  p.objective[eps] = 1;
  for (const auto& ineq : rows) {
    if (ineq.coefficients.size() != nl) throw PreconditionError("strict_feasibility: row width mismatch");
    Constraint c{ineq.coefficients, Relation::LessEqual, ineq.offset};
    c.row.push_back(1);
    p.constraints.push_back(std::move(c));
  }
  Constraint sum{std::vector<Rational>(nl + 1, Rational(1)), Relation::Equal, 1};
  sum.row[eps] = 0;
  p.constraints.push_back(std::move(sum));
  Constraint cap{std::vector<Rational>(nl + 1, Rational(0)), Relation::LessEqual, 1};
  cap.row[eps] = 1;
  p.constraints.push_back(std::move(cap));

  const Outcome o = solve(p);
  StrictResult r;
  if (o.status != Status::Optimal) return r;
  r.closure_feasible = true;
  r.slack = o.value;
  r.feasible = sgn(o.value) > 0;
  r.witness.assign(o.point.begin(), o.point.begin() + static_cast<std::ptrdiff_t>(nl));
  return r;
}

}  // namespace latcover::lp
