#include "hyperspace/hypermetrics.hpp"

#include <algorithm>
#include <set>

#include "hyperspace/errors.hpp"
#include "hyperspace/lp.hpp"

namespace hyperspace {

MetricConfig::MetricConfig() : functionals_(CoordinateFunctionals{}), normalizing_(PolarSpec{}) {}

MetricConfig::MetricConfig(TestFunctionals functionals, NormalizingSet normalizing)
    : functionals_(std::move(functionals)), normalizing_(std::move(normalizing)) {
  if (const auto* polar = std::get_if<PolarSpec>(&normalizing_)) {
    polar->validate();
  } else {
    const auto& K = std::get<Polyhedron>(normalizing_);
    if (!K.bounded()) throw UnboundedInput("normalizing set");
    normalizing_ = closed_convex_hull(K);
  }
}

namespace {

// Vectors supported on {0..stage-1} with entries p/q, |p| <= stage, 1 <= q <= stage.
void enumerate_stage(std::size_t stage, std::size_t count, std::set<SparseVec>& seen,
                     std::vector<SparseVec>& out) {
  std::set<Rational> value_set;
  for (std::size_t q = 1; q <= stage; ++q) {
    for (long p = -static_cast<long>(stage); p <= static_cast<long>(stage); ++p) {
      value_set.insert(Rational(p, static_cast<long>(q)));
    }
  }
  const std::vector<Rational> values(value_set.begin(), value_set.end());
  std::vector<std::size_t> digits(stage, 0);
  while (out.size() < count) {
    std::vector<SparseVec::Entry> entries;
    for (std::size_t k = 0; k < stage; ++k) entries.emplace_back(k, values[digits[k]]);
    SparseVec v(std::move(entries));
    if (!v.empty() && seen.insert(v).second) out.push_back(std::move(v));
    std::size_t k = 0;
    while (k < stage && ++digits[k] == values.size()) digits[k++] = 0;
    if (k == stage) break;
  }
}

}  // namespace

MetricConfig MetricConfig::dense_enumeration(std::size_t count, NormalizingSet normalizing) {
  std::vector<SparseVec> functionals;
  std::set<SparseVec> seen;
  for (std::size_t stage = 1; functionals.size() < count; ++stage) {
    enumerate_stage(stage, count, seen, functionals);
  }
  return MetricConfig(ExplicitFunctionals{std::move(functionals)}, std::move(normalizing));
}

Rational MetricConfig::normalizer(const SparseVec& A) const {
  if (const auto* polar = std::get_if<PolarSpec>(&normalizing_)) return polar->radius * sup_norm(A);
  Rational best = 0;
  for (const auto& v : std::get<Polyhedron>(normalizing_).vertices()) best = std::max(best, abs(pair(A, v)));
  return best;
}

Rational MetricConfig::weight(std::size_t n, const SparseVec& A) const {
  return pow2(-static_cast<int>(n)) / (1 + normalizer(A));
}

bool MetricConfig::contains(const SparseVec& sigma) const {
  if (const auto* polar = std::get_if<PolarSpec>(&normalizing_)) return polar_contains(sigma, *polar);
  return membership(sigma, std::get<Polyhedron>(normalizing_));
}

std::vector<MetricConfig::Term> MetricConfig::terms(const std::vector<SparseVec::Index>& support) const {
  std::vector<Term> out;
  if (std::holds_alternative<CoordinateFunctionals>(functionals_)) {
    for (auto m : support) {
      SparseVec A = SparseVec::unit(m);
      const std::size_t n = static_cast<std::size_t>(m) + 1;
      Rational w = weight(n, A);
      out.push_back({n, std::move(A), std::move(w)});
    }
    return out;
  }
  const auto& list = std::get<ExplicitFunctionals>(functionals_).functionals;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const bool touches = std::any_of(list[i].entries().begin(), list[i].entries().end(), [&](const auto& e) {
      return std::binary_search(support.begin(), support.end(), e.first);
    });
    if (touches) out.push_back({i + 1, list[i], weight(i + 1, list[i])});
  }
  return out;
}

Rational MetricConfig::truncation_bound() const {
  if (std::holds_alternative<CoordinateFunctionals>(functionals_)) return 0;
  const auto n = std::get<ExplicitFunctionals>(functionals_).functionals.size();
  return pow2(1 - static_cast<int>(n));
}

ClopenExpr ClopenExpr::bounded_in(CylinderSpec cylinder) {
  ClopenExpr e;
  e.op_ = Op::atom;
  e.cylinder_ = std::move(cylinder);
  return e;
}

ClopenExpr ClopenExpr::all_of(std::vector<ClopenExpr> children) {
  ClopenExpr e;
  e.op_ = Op::all_of;
  e.children_ = std::move(children);
  return e;
}

ClopenExpr ClopenExpr::any_of(std::vector<ClopenExpr> children) {
  ClopenExpr e;
  e.op_ = Op::any_of;
  e.children_ = std::move(children);
  return e;
}

ClopenExpr ClopenExpr::negation(ClopenExpr child) {
  ClopenExpr e;
  e.op_ = Op::negation;
  e.children_.push_back(std::move(child));
  return e;
}

namespace {

Rational distance_to_finite(const Rational& x, const std::vector<Rational>& ys) {
  auto it = std::lower_bound(ys.begin(), ys.end(), x);
  Rational best = abs(Rational(ys.front() - x));
  if (it != ys.end()) best = std::min(best, Rational(*it - x));
  if (it != ys.begin()) best = std::min(best, Rational(x - *std::prev(it)));
  return best;
}

// a - b for the one-sided excess terms; the difference of equal infinities is
// treated as -inf so it never dominates a max with 0.
Extended excess(const Extended& a, const Extended& b) {
  if (a.is_finite() && b.is_finite()) return Extended(Rational(a.value() - b.value()));
  if (a.kind() == b.kind()) return Extended::neg_inf();
  if (a.is_pos_inf() || b.is_neg_inf()) return Extended::pos_inf();
  return Extended::neg_inf();
}

// sup over x in X of dist(x, Y)
Extended directed_on_line(const ScalarSet& X, const ScalarSet& Y) {
  if (Y.is_interval()) {
    // dist(x, [l, u]) = max(l - x, x - u, 0), maximized at the ends of X.
    return std::max({Extended(0), excess(Y.lower(), X.lower()), excess(X.upper(), Y.upper())});
  }
  const auto& ys = Y.values();
  if (!X.is_interval()) {
    Rational best = 0;
    for (const auto& x : X.values()) best = std::max(best, distance_to_finite(x, ys));
    return best;
  }
  if (!X.lower().is_finite() || !X.upper().is_finite()) return Extended::pos_inf();
  const Rational& lo = X.lower().value();
  const Rational& hi = X.upper().value();
  Rational best = std::max(distance_to_finite(lo, ys), distance_to_finite(hi, ys));
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
    const Rational mid = (ys[i] + ys[i + 1]) / 2;
    if (lo <= mid && mid <= hi) best = std::max(best, distance_to_finite(mid, ys));
  }
  return best;
}

void require_in_normalizing_set(const SparseVec& v, const MetricConfig& cfg) {
  if (!cfg.contains(v)) throw NotInNormalizingSet(v.str());
}

}  // namespace

Extended hausdorff_on_line(const ScalarSet& X, const ScalarSet& Y) {
  return std::max(directed_on_line(X, Y), directed_on_line(Y, X));
}

Extended pseudometric_dH(const HyperSet& F, const HyperSet& G, const SparseVec& A) {
  return hausdorff_on_line(scalar_image(F, A), scalar_image(G, A));
}

Rational metric_d(const SparseVec& sigma, const SparseVec& tau, const MetricConfig& cfg) {
  require_in_normalizing_set(sigma, cfg);
  require_in_normalizing_set(tau, cfg);
  const SparseVec diff = sigma - tau;
  Rational total = 0;
  for (const auto& term : cfg.terms(diff.support())) total += term.weight * abs(pair(term.functional, diff));
  return total;
}

Rational distance_to_set(const SparseVec& sigma, const Polyhedron& P, const MetricConfig& cfg) {
  const auto& vertices = P.vertices();
  const auto& rays = P.rays();
  if (rays.empty() && std::find(vertices.begin(), vertices.end(), sigma) != vertices.end()) return 0;

  const std::vector<SparseVec> target{sigma};
  const auto terms = cfg.terms(joint_support({&target, &vertices, &rays}));
  const std::size_t nv = vertices.size();
  const std::size_t nr = rays.size();
  const std::size_t base = nv + nr;

  // Variables: convex weights, conic weights, then (over, under) per term.
  LpProblem lp;
  for (std::size_t j = 0; j < base + 2 * terms.size(); ++j) lp.nonnegative.insert(j);
  std::vector<SparseVec::Entry> objective;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& A = terms[t].functional;
    std::vector<SparseVec::Entry> row;
    for (std::size_t i = 0; i < nv; ++i) row.emplace_back(i, pair(A, vertices[i]));
    for (std::size_t j = 0; j < nr; ++j) row.emplace_back(nv + j, pair(A, rays[j]));
    row.emplace_back(base + 2 * t, Rational(1));
    row.emplace_back(base + 2 * t + 1, Rational(-1));
    lp.add_row(SparseVec(std::move(row)), Relation::equal, pair(A, sigma));
    objective.emplace_back(base + 2 * t, terms[t].weight);
    objective.emplace_back(base + 2 * t + 1, terms[t].weight);
  }
  std::vector<SparseVec::Entry> sum;
  for (std::size_t i = 0; i < nv; ++i) sum.emplace_back(i, Rational(1));
  lp.add_row(SparseVec(std::move(sum)), Relation::equal, 1);
  lp.objective = SparseVec(std::move(objective));

  const auto outcome = lp_solve(lp, Sense::minimize);
  return std::get<LpOptimal>(outcome).value;
}

Rational directed_hausdorff(const Polyhedron& P, const Polyhedron& Q, const MetricConfig& cfg) {
  Rational best = 0;
  for (const auto& v : P.vertices()) best = std::max(best, distance_to_set(v, Q, cfg));
  return best;
}

Rational hausdorff_full(const Polyhedron& P, const Polyhedron& Q, const MetricConfig& cfg) {
  if (!P.bounded() || !Q.bounded()) throw UnboundedInput("hausdorff_full");
  for (const auto* S : {&P, &Q}) {
    for (const auto& v : S->vertices()) require_in_normalizing_set(v, cfg);
  }
  return std::max(directed_hausdorff(P, Q, cfg), directed_hausdorff(Q, P, cfg));
}

namespace {

// Separates v from co(Q): a coordinate functional when one suffices,
// otherwise the Farkas multipliers of the failed membership LP.
std::optional<SparseVec> separate(const SparseVec& v, const Polyhedron& Q) {
  auto test = membership_test(v, Q.vertices(), Q.rays());
  if (test.member) return std::nullopt;
  const std::vector<SparseVec> target{v};
  for (auto m : joint_support({&target, &Q.vertices()})) {
    const SparseVec e = SparseVec::unit(m);
    const Extended value = pair(e, v);
    if (support_value(Q, e) < value || value < -support_value(Q, -e)) return e;
  }
  return test.separator;
}

}  // namespace

std::optional<SparseVec> separating_direction(const Polyhedron& P, const Polyhedron& Q) {
  for (const auto& v : P.vertices()) {
    if (auto A = separate(v, Q)) return A;
  }
  for (const auto& v : Q.vertices()) {
    if (auto A = separate(v, P)) return A;
  }
  return immeasurable_witness(P, Q);
}

std::optional<SparseVec> immeasurable_witness(const Polyhedron& P, const Polyhedron& Q) {
  // A ray s of one cone outside the other cone gives A with <A, s> > 0 while
  // A is nonpositive on the other cone: one image is unbounded above, the
  // other is not.
  auto witness = [](const std::vector<SparseVec>& mine, const std::vector<SparseVec>& theirs)
      -> std::optional<SparseVec> {
    for (const auto& s : mine) {
      auto test = cone_test(s, theirs);
      if (test.member) continue;
      for (const auto& e : s.entries()) {
        const SparseVec A = SparseVec::unit(e.first, Rational(e.second.sign()));
        const bool works = std::all_of(theirs.begin(), theirs.end(),
                                       [&](const SparseVec& r) { return pair(A, r).sign() <= 0; });
        if (works) return A;
      }
      return test.separator;
    }
    return std::nullopt;
  };
  if (auto a = witness(Q.rays(), P.rays())) return a;
  return witness(P.rays(), Q.rays());
}

bool cylinder_bounded(const Polyhedron& P, const CylinderSpec& V) {
  for (const auto& r : P.rays()) {
    for (const auto& A : V.generators) {
      if (!pair(A, r).is_zero()) return false;
    }
  }
  return true;
}

bool clopen_eval(const ClopenExpr& expr, const Polyhedron& P) {
  const auto& kids = expr.children();
  switch (expr.op()) {
    case ClopenExpr::Op::atom: return cylinder_bounded(P, expr.cylinder());
    case ClopenExpr::Op::all_of:
      return std::all_of(kids.begin(), kids.end(), [&](const ClopenExpr& c) { return clopen_eval(c, P); });
    case ClopenExpr::Op::any_of:
      return std::any_of(kids.begin(), kids.end(), [&](const ClopenExpr& c) { return clopen_eval(c, P); });
    case ClopenExpr::Op::negation: break;
  }
  return !clopen_eval(kids.front(), P);
}

}  // namespace hyperspace
