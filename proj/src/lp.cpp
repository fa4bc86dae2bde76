#include "cxs/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace cxs {

namespace {

// Standard-form tableau: rows a[i] over all columns plus rhs, one basic
// column per row, and an incrementally maintained reduced-cost row.
struct Tableau {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> rhs;
  std::vector<int> basis;
  std::vector<Rational> cost;  // reduced costs
  Rational objective;          // current objective value
  int ncols = 0;
  Budget& b;

  explicit Tableau(Budget& budget) : b(budget) {}

  int rows() const { return static_cast<int>(a.size()); }
  int cols() const { return ncols; }

  void pivot(int r, int c) {
    b.charge(static_cast<std::uint64_t>(rows() + 1) * static_cast<std::uint64_t>(cols() + 1));
    Rational inv = a[r][c];
    for (Rational& v : a[r]) v /= inv;
    rhs[r] /= inv;
    for (int i = 0; i < rows(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational factor = a[i][c];
      for (int j = 0; j < cols(); ++j) a[i][j] -= factor * a[r][j];
      rhs[i] -= factor * rhs[r];
    }
    if (cost[c] != 0) {
      Rational factor = cost[c];
      for (int j = 0; j < cols(); ++j) cost[j] -= factor * a[r][j];
      objective -= factor * rhs[r];
    }
    basis[r] = c;
  }

  // Installs reduced costs for the objective c over the allowed columns,
  // eliminating the current basic columns.
  void load_cost(const std::vector<Rational>& c) {
    cost = c;
    cost.resize(static_cast<std::size_t>(cols()), Rational(0));
    objective = 0;
    for (int i = 0; i < rows(); ++i) {
      Rational cb = cost[static_cast<std::size_t>(basis[i])];
      if (cb == 0) continue;
      for (int j = 0; j < cols(); ++j) cost[j] -= cb * a[i][j];
      objective -= cb * rhs[i];
    }
  }

  // Minimizes the loaded cost over the allowed columns. Returns false when
  // some eligible column proves the problem unbounded.
  bool minimize(const std::vector<char>& allowed) {
    while (true) {
      int entering = -1;
      for (int j = 0; j < cols(); ++j) {
        if (allowed[static_cast<std::size_t>(j)] && cost[j] < 0) {
          entering = j;
          break;  // Bland: least eligible index
        }
      }
      if (entering < 0) return true;
      int leaving = -1;
      Rational best;
      for (int i = 0; i < rows(); ++i) {
        if (a[i][entering] <= 0) continue;
        Rational ratio = rhs[i] / a[i][entering];
        if (leaving < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem, Budget* budget) {
  BudgetScope bs(budget);
  Budget& b = *bs;
  const int nv = problem.var_count;
  if (nv < 0 || static_cast<int>(problem.objective.size()) != nv)
    throw Error(ErrorKind::PreconditionViolation, "objective length must match the variable count");
  for (const LpConstraint& c : problem.constraints)
    if (static_cast<int>(c.coeffs.size()) != nv)
      throw Error(ErrorKind::PreconditionViolation, "constraint length must match the variable count");

  // Normalize rows to nonnegative right-hand sides, then add one slack or
  // surplus column per inequality and one artificial column per row that
  // lacks an identity column.
  const int m = static_cast<int>(problem.constraints.size());
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(m));
  std::vector<Rational> rhs(static_cast<std::size_t>(m));
  std::vector<LpRel> rels(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    rows[static_cast<std::size_t>(i)] = problem.constraints[static_cast<std::size_t>(i)].coeffs;
    rhs[static_cast<std::size_t>(i)] = problem.constraints[static_cast<std::size_t>(i)].rhs;
    rels[static_cast<std::size_t>(i)] = problem.constraints[static_cast<std::size_t>(i)].rel;
    if (rhs[static_cast<std::size_t>(i)] < 0) {
      for (Rational& v : rows[static_cast<std::size_t>(i)]) v = -v;
      rhs[static_cast<std::size_t>(i)] = -rhs[static_cast<std::size_t>(i)];
      if (rels[static_cast<std::size_t>(i)] == LpRel::Le)
        rels[static_cast<std::size_t>(i)] = LpRel::Ge;
      else if (rels[static_cast<std::size_t>(i)] == LpRel::Ge)
        rels[static_cast<std::size_t>(i)] = LpRel::Le;
    }
  }

  int slack_count = 0;
  for (LpRel r : rels)
    if (r != LpRel::Eq) ++slack_count;
  int artificial_count = 0;
  for (LpRel r : rels)
    if (r != LpRel::Le) ++artificial_count;
  const int total = nv + slack_count + artificial_count;
  const int artificial_base = nv + slack_count;

  Tableau t(b);
  t.ncols = total;
  t.a.assign(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(total), Rational(0)));
  t.rhs = rhs;
  t.basis.assign(static_cast<std::size_t>(m), -1);
  int next_slack = nv, next_art = artificial_base;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < nv; ++j) t.a[i][static_cast<std::size_t>(j)] = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    switch (rels[static_cast<std::size_t>(i)]) {
      case LpRel::Le:
        t.a[i][static_cast<std::size_t>(next_slack)] = 1;
        t.basis[static_cast<std::size_t>(i)] = next_slack++;
        break;
      case LpRel::Ge:
        t.a[i][static_cast<std::size_t>(next_slack++)] = -1;
        t.a[i][static_cast<std::size_t>(next_art)] = 1;
        t.basis[static_cast<std::size_t>(i)] = next_art++;
        break;
      case LpRel::Eq:
        t.a[i][static_cast<std::size_t>(next_art)] = 1;
        t.basis[static_cast<std::size_t>(i)] = next_art++;
        break;
    }
  }

  std::vector<char> allowed(static_cast<std::size_t>(total), 1);

  if (artificial_count > 0) {
    std::vector<Rational> phase1(static_cast<std::size_t>(total), Rational(0));
    for (int j = artificial_base; j < total; ++j) phase1[static_cast<std::size_t>(j)] = 1;
    t.load_cost(phase1);
    if (!t.minimize(allowed)) throw std::logic_error("phase-1 objective cannot be unbounded");
    if (t.objective != 0) return {LpStatus::Infeasible, Rational(0), {}};
    // Pivot surviving artificials out of the basis; a row with no usable
    // column is a redundant equation and is dropped.
    for (int i = t.rows() - 1; i >= 0; --i) {
      if (t.basis[static_cast<std::size_t>(i)] < artificial_base) continue;
      int col = -1;
      for (int j = 0; j < artificial_base; ++j) {
        if (t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        t.pivot(i, col);
      } else {
        t.a.erase(t.a.begin() + i);
        t.rhs.erase(t.rhs.begin() + i);
        t.basis.erase(t.basis.begin() + i);
      }
    }
    for (int j = artificial_base; j < total; ++j) allowed[static_cast<std::size_t>(j)] = 0;
  }

  std::vector<Rational> phase2(static_cast<std::size_t>(total), Rational(0));
  for (int j = 0; j < nv; ++j) {
    phase2[static_cast<std::size_t>(j)] = problem.sense == LpSense::Maximize
                                              ? -problem.objective[static_cast<std::size_t>(j)]
                                              : problem.objective[static_cast<std::size_t>(j)];
  }
  t.load_cost(phase2);
  if (!t.minimize(allowed)) return {LpStatus::Unbounded, Rational(0), {}};

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.x.assign(static_cast<std::size_t>(nv), Rational(0));
  for (int i = 0; i < t.rows(); ++i)
    if (t.basis[static_cast<std::size_t>(i)] < nv)
      sol.x[static_cast<std::size_t>(t.basis[static_cast<std::size_t>(i)])] = t.rhs[static_cast<std::size_t>(i)];
  sol.value = 0;
  for (int j = 0; j < nv; ++j)
    sol.value += problem.objective[static_cast<std::size_t>(j)] * sol.x[static_cast<std::size_t>(j)];
  return sol;
}

}  // namespace cxs
