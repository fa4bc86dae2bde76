#pragma once

#include <vector>

#include "cxs/bigmath.hpp"
#include "cxs/errors.hpp"

namespace cxs {

enum class LpSense { Minimize, Maximize };
enum class LpRel { Le, Ge, Eq };

struct LpConstraint {
  std::vector<Rational> coeffs;
  LpRel rel = LpRel::Le;
  Rational rhs;
};

// Dense linear program over exact rationals; variables are implicitly
// nonnegative.
struct LpProblem {
  int var_count = 0;
  LpSense sense = LpSense::Minimize;
  std::vector<Rational> objective;
  std::vector<LpConstraint> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;
};

// Two-phase dense simplex with Bland's rule (least eligible column enters,
// ratio ties leave by least basic index), which precludes cycling. All
// arithmetic is exact; intended for small dense instances only.
LpSolution solve_lp(const LpProblem& problem, Budget* budget = nullptr);

}  // namespace cxs
