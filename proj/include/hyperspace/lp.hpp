#pragma once

#include <set>
#include <variant>
#include <vector>

#include "hyperspace/rational.hpp"
#include "hyperspace/sparse_vec.hpp"

namespace hyperspace {

enum class Relation { less_equal, equal, greater_equal };
enum class Sense { maximize, minimize };

/// coefficients . x  (relation)  rhs
struct LpRow {
  SparseVec coefficients;
  Relation relation = Relation::less_equal;
  Rational rhs{0};
};

/// A linear program over the variables named by the union of supports.
/// Variables listed in `nonnegative` are constrained to be >= 0; every other
/// variable is free.
struct LpProblem {
  SparseVec objective;
  std::vector<LpRow> rows;
  std::set<SparseVec::Index> nonnegative;

  void add_row(SparseVec coefficients, Relation relation, Rational rhs) {
    rows.push_back({std::move(coefficients), relation, std::move(rhs)});
  }
  std::vector<SparseVec::Index> variables() const;
};

/// Optimum with primal witness and a dual certificate of optimality.
///
/// For `maximize` the duals y satisfy y_i >= 0 on <= rows, y_i <= 0 on >=
/// rows, sum_i y_i a_ij >= c_j for nonnegative j (= c_j for free j) and
/// sum_i y_i b_i = value. For `minimize` every inequality is reversed.
struct LpOptimal {
  Rational value;
  SparseVec point;
  std::vector<Rational> duals;
};

/// A feasible point and a ray along which the objective improves without bound.
struct LpUnbounded {
  SparseVec point;
  SparseVec ray;
};

/// Farkas multipliers y (one per row): y_i <= 0 on <= rows, y_i >= 0 on >=
/// rows, g = sum_i y_i a_i has g_j <= 0 on nonnegative variables and g_j = 0 on
/// free ones, and sum_i y_i b_i > 0. No feasible x can exist since
/// 0 >= g.x >= y.b > 0.
struct LpInfeasible {
  std::vector<Rational> farkas;
};

using LpOutcome = std::variant<LpOptimal, LpUnbounded, LpInfeasible>;

/// Two-phase primal simplex over exact rationals with Bland's pivot rule.
LpOutcome lp_solve(const LpProblem& problem, Sense sense);

/// Re-checks the certificate carried by `outcome` against `problem` using
/// nothing but exact arithmetic on the original rows.
bool certify(const LpProblem& problem, Sense sense, const LpOutcome& outcome);

/// Exact feasibility of `point` for every row and sign constraint.
bool satisfies(const LpProblem& problem, const SparseVec& point);

}  // namespace hyperspace
