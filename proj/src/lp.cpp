#include "hyperspace/lp.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace hyperspace {

std::vector<SparseVec::Index> LpProblem::variables() const {
  std::set<SparseVec::Index> vars(nonnegative.begin(), nonnegative.end());
  for (const auto& e : objective.entries()) vars.insert(e.first);
  for (const auto& row : rows) {
    for (const auto& e : row.coefficients.entries()) vars.insert(e.first);
  }
  return {vars.begin(), vars.end()};
}

namespace {

using Index = SparseVec::Index;
constexpr std::size_t kNone = static_cast<std::size_t>(-1);

Relation flip(Relation r) {
  switch (r) {
    case Relation::less_equal: return Relation::greater_equal;
    case Relation::greater_equal: return Relation::less_equal;
    case Relation::equal: break;
  }
  return Relation::equal;
}

enum class ColumnKind { positive_part, negative_part, slack, surplus, artificial };

struct Column {
  ColumnKind kind;
  std::size_t owner;  // variable position for structural columns, row otherwise
};

class Simplex {
 public:
  Simplex(const LpProblem& problem, Sense sense) : problem_(problem), sense_(sense) { build(); }

  LpOutcome run() {
    if (has_artificials_) {
      std::vector<Rational> phase1(columns_.size(), Rational(0));
      for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (columns_[j].kind == ColumnKind::artificial) phase1[j] = -1;
      }
      set_costs(std::move(phase1));
      const std::size_t stuck = iterate();
      (void)stuck;  // phase 1 is bounded above by 0
      if (reduced_[rhs_col()].sign() > 0) return infeasible();
      drive_out_artificials();
      for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (columns_[j].kind == ColumnKind::artificial) blocked_[j] = true;
      }
    }
    std::vector<Rational> phase2(columns_.size(), Rational(0));
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      const auto& col = columns_[j];
      if (col.kind != ColumnKind::positive_part && col.kind != ColumnKind::negative_part) continue;
      Rational c = problem_.objective[vars_[col.owner]];
      if (sense_ == Sense::minimize) c = -c;
      phase2[j] = col.kind == ColumnKind::positive_part ? c : Rational(-c);
    }
    set_costs(std::move(phase2));
    const std::size_t unbounded_col = iterate();
    if (unbounded_col != kNone) return unbounded(unbounded_col);
    return optimal();
  }

 private:
  std::size_t rhs_col() const { return columns_.size(); }

  void build() {
    vars_ = problem_.variables();
    std::map<Index, std::size_t> position;
    for (std::size_t k = 0; k < vars_.size(); ++k) position[vars_[k]] = k;
    const std::size_t m = problem_.rows.size();

    // Structural columns first so Bland's rule prefers them.
    std::vector<std::size_t> plus_col(vars_.size()), minus_col(vars_.size(), kNone);
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      plus_col[k] = columns_.size();
      columns_.push_back({ColumnKind::positive_part, k});
      if (!problem_.nonnegative.contains(vars_[k])) {
        minus_col[k] = columns_.size();
        columns_.push_back({ColumnKind::negative_part, k});
      }
    }

    std::vector<std::size_t> occurrences(vars_.size(), 0);
    for (const auto& row : problem_.rows) {
      for (const auto& e : row.coefficients.entries()) ++occurrences[position[e.first]];
    }

    // Standardize each row to a nonnegative right-hand side and pick its
    // initial basic column: a slack, a structural unit column, or an artificial.
    std::vector<Rational> row_sign(m);
    std::vector<Relation> relation(m);
    std::vector<std::size_t> extra(m, kNone);
    init_col_.assign(m, kNone);
    row_scale_.assign(m, Rational(1));
    std::vector<bool> used(columns_.size(), false);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& row = problem_.rows[i];
      row_sign[i] = row.rhs.sign() < 0 ? -1 : 1;
      relation[i] = row.rhs.sign() < 0 ? flip(row.relation) : row.relation;
      if (relation[i] == Relation::less_equal) {
        extra[i] = columns_.size();
        columns_.push_back({ColumnKind::slack, i});
        init_col_[i] = extra[i];
        continue;
      }
      if (relation[i] == Relation::greater_equal) {
        extra[i] = columns_.size();
        columns_.push_back({ColumnKind::surplus, i});
      }
      for (const auto& e : row.coefficients.entries()) {
        const std::size_t k = position[e.first];
        if (occurrences[k] != 1) continue;
        const Rational v = row_sign[i] * e.second;
        std::size_t candidate = kNone;
        if (v.sign() > 0) {
          candidate = plus_col[k];
        } else if (minus_col[k] != kNone) {
          candidate = minus_col[k];
        }
        if (candidate == kNone || used[candidate]) continue;
        used[candidate] = true;
        init_col_[i] = candidate;
        row_scale_[i] = Rational(1) / abs(v);
        break;
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (init_col_[i] != kNone) continue;
      init_col_[i] = columns_.size();
      columns_.push_back({ColumnKind::artificial, i});
      has_artificials_ = true;
    }

    const std::size_t n = columns_.size();
    table_.assign(m, std::vector<Rational>(n + 1, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
      const auto& row = problem_.rows[i];
      const Rational factor = row_sign[i] * row_scale_[i];
      for (const auto& e : row.coefficients.entries()) {
        const std::size_t k = position[e.first];
        const Rational v = factor * e.second;
        table_[i][plus_col[k]] = v;
        if (minus_col[k] != kNone) table_[i][minus_col[k]] = -v;
      }
      if (extra[i] != kNone) {
        table_[i][extra[i]] = relation[i] == Relation::less_equal ? 1 : -1;
      }
      if (columns_[init_col_[i]].kind == ColumnKind::artificial) table_[i][init_col_[i]] = 1;
      table_[i][n] = factor * row.rhs;
      row_scale_[i] = factor;
    }
    basis_ = init_col_;
    blocked_.assign(n, false);
  }

  void set_costs(std::vector<Rational> costs) {
    costs_ = std::move(costs);
    const std::size_t n = columns_.size();
    reduced_.assign(n + 1, Rational(0));
    for (std::size_t j = 0; j < n; ++j) reduced_[j] = costs_[j];
    for (std::size_t r = 0; r < table_.size(); ++r) {
      const Rational& cb = costs_[basis_[r]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= n; ++j) {
        if (!table_[r][j].is_zero()) reduced_[j] -= cb * table_[r][j];
      }
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = table_[r];
    const Rational inv = Rational(1) / prow[c];
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k < prow.size(); ++k) {
      if (prow[k].is_zero()) continue;
      prow[k] *= inv;
      nz.push_back(k);
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[c].is_zero()) return;
      const Rational f = row[c];
      for (std::size_t k : nz) row[k] -= f * prow[k];
    };
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (i != r) eliminate(table_[i]);
    }
    eliminate(reduced_);
    basis_[r] = c;
  }

  // Runs Bland's rule to optimality. Returns the entering column when the
  // problem is unbounded in that direction, kNone at optimality.
  std::size_t iterate() {
    const std::size_t n = columns_.size();
    while (true) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < n; ++j) {
        if (!blocked_[j] && reduced_[j].sign() > 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return kNone;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t r = 0; r < table_.size(); ++r) {
        if (table_[r][enter].sign() <= 0) continue;
        Rational ratio = table_[r][n] / table_[r][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return enter;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < table_.size(); ++r) {
      if (columns_[basis_[r]].kind != ColumnKind::artificial) continue;
      for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (columns_[j].kind != ColumnKind::artificial && !table_[r][j].is_zero()) {
          pivot(r, j);
          break;
        }
      }
    }
  }

  std::vector<Rational> column_values() const {
    std::vector<Rational> x(columns_.size(), Rational(0));
    for (std::size_t r = 0; r < table_.size(); ++r) x[basis_[r]] = table_[r][rhs_col()];
    return x;
  }

  SparseVec to_variables(const std::vector<Rational>& x) const {
    std::vector<SparseVec::Entry> entries;
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      if (x[j].is_zero()) continue;
      const auto& col = columns_[j];
      if (col.kind == ColumnKind::positive_part) entries.emplace_back(vars_[col.owner], x[j]);
      if (col.kind == ColumnKind::negative_part) entries.emplace_back(vars_[col.owner], -x[j]);
    }
    return SparseVec(std::move(entries));
  }

  // y' = c_B B^{-1}, read off the columns that formed the initial identity basis.
  std::vector<Rational> tableau_duals() const {
    std::vector<Rational> y(table_.size(), Rational(0));
    for (std::size_t i = 0; i < table_.size(); ++i) {
      for (std::size_t r = 0; r < table_.size(); ++r) {
        const Rational& cb = costs_[basis_[r]];
        if (!cb.is_zero()) y[i] += cb * table_[r][init_col_[i]];
      }
    }
    return y;
  }

  LpOutcome infeasible() const {
    auto y = tableau_duals();
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = -row_scale_[i] * y[i];
    return LpInfeasible{std::move(y)};
  }

  LpOutcome unbounded(std::size_t enter) const {
    std::vector<Rational> dir(columns_.size(), Rational(0));
    dir[enter] = 1;
    for (std::size_t r = 0; r < table_.size(); ++r) dir[basis_[r]] = -table_[r][enter];
    return LpUnbounded{to_variables(column_values()), to_variables(dir)};
  }

  LpOutcome optimal() const {
    auto y = tableau_duals();
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] = row_scale_[i] * y[i];
      if (sense_ == Sense::minimize) y[i] = -y[i];
    }
    Rational value = -reduced_[rhs_col()];
    if (sense_ == Sense::minimize) value = -value;
    return LpOptimal{std::move(value), to_variables(column_values()), std::move(y)};
  }

  const LpProblem& problem_;
  Sense sense_;
  std::vector<Index> vars_;
  std::vector<Column> columns_;
  std::vector<std::vector<Rational>> table_;
  std::vector<Rational> reduced_;
  std::vector<Rational> costs_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> init_col_;
  std::vector<Rational> row_scale_;
  std::vector<bool> blocked_;
  bool has_artificials_ = false;
};

bool relation_holds(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::less_equal: return lhs <= rhs;
    case Relation::greater_equal: return lhs >= rhs;
    case Relation::equal: break;
  }
  return lhs == rhs;
}

// Sign pattern that a multiplier must have for a maximization dual / Farkas
// combination: +1 means >= 0, -1 means <= 0, 0 means free.
int multiplier_sign(Relation rel) {
  switch (rel) {
    case Relation::less_equal: return 1;
    case Relation::greater_equal: return -1;
    case Relation::equal: break;
  }
  return 0;
}

bool sign_ok(const Rational& y, int required) {
  return required == 0 || (required > 0 ? y.sign() >= 0 : y.sign() <= 0);
}

SparseVec combine_rows(const LpProblem& problem, const std::vector<Rational>& y) {
  SparseVec g;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!y[i].is_zero()) g += y[i] * problem.rows[i].coefficients;
  }
  return g;
}

}  // namespace

LpOutcome lp_solve(const LpProblem& problem, Sense sense) { return Simplex(problem, sense).run(); }

bool satisfies(const LpProblem& problem, const SparseVec& point) {
  for (const auto& e : point.entries()) {
    if (problem.nonnegative.contains(e.first) && e.second.sign() < 0) return false;
  }
  return std::all_of(problem.rows.begin(), problem.rows.end(), [&](const LpRow& row) {
    return relation_holds(pair(row.coefficients, point), row.relation, row.rhs);
  });
}

bool certify(const LpProblem& problem, Sense sense, const LpOutcome& outcome) {
  const auto vars = problem.variables();
  const int dir = sense == Sense::maximize ? 1 : -1;

  if (const auto* opt = std::get_if<LpOptimal>(&outcome)) {
    if (!satisfies(problem, opt->point)) return false;
    if (pair(problem.objective, opt->point) != opt->value) return false;
    if (opt->duals.size() != problem.rows.size()) return false;
    Rational dual_value = 0;
    for (std::size_t i = 0; i < opt->duals.size(); ++i) {
      if (!sign_ok(opt->duals[i], dir * multiplier_sign(problem.rows[i].relation))) return false;
      dual_value += opt->duals[i] * problem.rows[i].rhs;
    }
    if (dual_value != opt->value) return false;
    const SparseVec g = combine_rows(problem, opt->duals);
    for (Index v : vars) {
      const Rational slack = dir * (g[v] - problem.objective[v]);
      if (problem.nonnegative.contains(v) ? slack.sign() < 0 : !slack.is_zero()) return false;
    }
    return true;
  }

  if (const auto* unb = std::get_if<LpUnbounded>(&outcome)) {
    if (!satisfies(problem, unb->point)) return false;
    for (const auto& e : unb->ray.entries()) {
      if (problem.nonnegative.contains(e.first) && e.second.sign() < 0) return false;
    }
    for (const auto& row : problem.rows) {
      if (!relation_holds(pair(row.coefficients, unb->ray), row.relation, Rational(0))) return false;
    }
    return dir * pair(problem.objective, unb->ray).sign() > 0;
  }

  const auto& inf = std::get<LpInfeasible>(outcome);
  if (inf.farkas.size() != problem.rows.size()) return false;
  Rational combined_rhs = 0;
  for (std::size_t i = 0; i < inf.farkas.size(); ++i) {
    if (!sign_ok(inf.farkas[i], -multiplier_sign(problem.rows[i].relation))) return false;
    combined_rhs += inf.farkas[i] * problem.rows[i].rhs;
  }
  if (combined_rhs.sign() <= 0) return false;
  const SparseVec g = combine_rows(problem, inf.farkas);
  for (Index v : vars) {
    if (problem.nonnegative.contains(v) ? g[v].sign() > 0 : !g[v].is_zero()) return false;
  }
  return true;
}

}  // namespace hyperspace
