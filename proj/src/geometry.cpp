#include "hyperspace/geometry.hpp"

#include <algorithm>
#include <set>

#include "hyperspace/errors.hpp"
#include "hyperspace/lp.hpp"

namespace hyperspace {

namespace {

std::vector<SparseVec> dedupe(std::vector<SparseVec> items) {
  std::vector<SparseVec> out;
  std::set<SparseVec> seen;
  for (auto& v : items) {
    if (seen.insert(v).second) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

PointSet::PointSet(std::vector<SparseVec> points) : points_(dedupe(std::move(points))) {
  if (points_.empty()) throw BadParameter("a point set must be nonempty");
}

bool PointSet::contains(const SparseVec& p) const {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

Polyhedron::Polyhedron(std::vector<SparseVec> vertices, std::vector<SparseVec> rays, bool irredundant)
    : vertices_(std::move(vertices)), rays_(std::move(rays)), irredundant_(irredundant) {
  if (vertices_.empty()) throw BadParameter("a polyhedron needs at least one vertex");
  for (const auto& r : rays_) {
    if (r.empty()) throw BadParameter("recession rays must be nonzero");
  }
}

void PolarSpec::validate() const {
  if (radius.sign() <= 0) throw BadParameter("polar radius must be positive");
}

ScalarSet ScalarSet::finite(std::vector<Rational> values) {
  if (values.empty()) throw BadParameter("finite scalar set must be nonempty");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  ScalarSet s;
  s.values_ = std::move(values);
  s.lower_ = s.values_.front();
  s.upper_ = s.values_.back();
  return s;
}

ScalarSet ScalarSet::interval(Extended lower, Extended upper) {
  if (upper < lower || lower.is_pos_inf() || upper.is_neg_inf()) {
    throw BadParameter("interval lower end exceeds upper end");
  }
  ScalarSet s;
  s.interval_ = true;
  s.lower_ = std::move(lower);
  s.upper_ = std::move(upper);
  return s;
}

ScalarSet ScalarSet::interval_hull() const { return interval(lower_, upper_); }

std::vector<SparseVec::Index> joint_support(const std::vector<const std::vector<SparseVec>*>& groups) {
  std::set<SparseVec::Index> idx;
  for (const auto* g : groups) {
    for (const auto& v : *g) {
      for (const auto& e : v.entries()) idx.insert(e.first);
    }
  }
  return {idx.begin(), idx.end()};
}

Membership membership_test(const SparseVec& sigma, const std::vector<SparseVec>& vertices,
                           const std::vector<SparseVec>& rays) {
  // Variables 0..nv-1 are convex weights, nv.. are conic weights.
  const std::vector<SparseVec> target{sigma};
  const auto coords = joint_support({&target, &vertices, &rays});
  const std::size_t nv = vertices.size();
  LpProblem lp;
  for (std::size_t j = 0; j < nv + rays.size(); ++j) lp.nonnegative.insert(j);
  for (auto m : coords) {
    std::vector<SparseVec::Entry> row;
    for (std::size_t i = 0; i < nv; ++i) row.emplace_back(i, vertices[i][m]);
    for (std::size_t j = 0; j < rays.size(); ++j) row.emplace_back(nv + j, rays[j][m]);
    lp.add_row(SparseVec(std::move(row)), Relation::equal, sigma[m]);
  }
  std::vector<SparseVec::Entry> sum;
  for (std::size_t i = 0; i < nv; ++i) sum.emplace_back(i, Rational(1));
  lp.add_row(SparseVec(std::move(sum)), Relation::equal, 1);

  Membership out;
  const auto outcome = lp_solve(lp, Sense::maximize);
  if (const auto* opt = std::get_if<LpOptimal>(&outcome)) {
    out.member = true;
    for (std::size_t j = 0; j < nv + rays.size(); ++j) out.weights.push_back(opt->point[j]);
    return out;
  }
  const auto& farkas = std::get<LpInfeasible>(outcome).farkas;
  std::vector<SparseVec::Entry> sep;
  for (std::size_t r = 0; r < coords.size(); ++r) sep.emplace_back(coords[r], farkas[r]);
  out.separator = SparseVec(std::move(sep));
  return out;
}

bool membership(const SparseVec& sigma, const Polyhedron& P) {
  return membership_test(sigma, P.vertices(), P.rays()).member;
}

ConeMembership cone_test(const SparseVec& r, const std::vector<SparseVec>& generators) {
  const std::vector<SparseVec> target{r};
  const auto coords = joint_support({&target, &generators});
  LpProblem lp;
  for (std::size_t j = 0; j < generators.size(); ++j) lp.nonnegative.insert(j);
  for (auto m : coords) {
    std::vector<SparseVec::Entry> row;
    for (std::size_t j = 0; j < generators.size(); ++j) row.emplace_back(j, generators[j][m]);
    lp.add_row(SparseVec(std::move(row)), Relation::equal, r[m]);
  }
  ConeMembership out;
  const auto outcome = lp_solve(lp, Sense::maximize);
  if (const auto* inf = std::get_if<LpInfeasible>(&outcome)) {
    std::vector<SparseVec::Entry> sep;
    for (std::size_t k = 0; k < coords.size(); ++k) sep.emplace_back(coords[k], inf->farkas[k]);
    out.separator = SparseVec(std::move(sep));
  } else {
    out.member = true;
  }
  return out;
}

bool in_cone(const SparseVec& r, const std::vector<SparseVec>& generators) {
  return cone_test(r, generators).member;
}

Polyhedron closed_convex_hull(const Polyhedron& P) {
  if (P.irredundant()) return P;
  std::vector<SparseVec> rays = dedupe(P.rays());
  for (std::size_t j = 0; j < rays.size();) {
    std::vector<SparseVec> others = rays;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(j));
    if (in_cone(rays[j], others)) {
      rays = std::move(others);
    } else {
      ++j;
    }
  }
  std::vector<SparseVec> vertices = dedupe(P.vertices());
  for (std::size_t i = 0; i < vertices.size() && vertices.size() > 1;) {
    std::vector<SparseVec> others = vertices;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
    if (membership_test(vertices[i], others, rays).member) {
      vertices = std::move(others);
    } else {
      ++i;
    }
  }
  return Polyhedron(std::move(vertices), std::move(rays), true);
}

Polyhedron closed_convex_hull(const PointSet& F) {
  return closed_convex_hull(Polyhedron(F.points()));
}

Polyhedron closed_convex_hull(const HyperSet& F) {
  return std::visit([](const auto& s) { return closed_convex_hull(s); }, F);
}

PointSet irredundant_vertices(const Polyhedron& P) { return PointSet(closed_convex_hull(P).vertices()); }

Extended support_value(const Polyhedron& P, const SparseVec& A) {
  for (const auto& r : P.rays()) {
    if (pair(A, r).sign() > 0) return Extended::pos_inf();
  }
  Rational best = pair(A, P.vertices().front());
  for (const auto& v : P.vertices()) best = std::max(best, pair(A, v));
  return best;
}

ScalarSet scalar_image(const PointSet& F, const SparseVec& A) {
  std::vector<Rational> values;
  values.reserve(F.size());
  for (const auto& p : F.points()) values.push_back(pair(A, p));
  return ScalarSet::finite(std::move(values));
}

ScalarSet scalar_image(const Polyhedron& P, const SparseVec& A) {
  return ScalarSet::interval(-support_value(P, -A), support_value(P, A));
}

ScalarSet scalar_image(const HyperSet& F, const SparseVec& A) {
  return std::visit([&](const auto& s) { return scalar_image(s, A); }, F);
}

std::vector<SparseVec> recession_rays(const Polyhedron& P) { return closed_convex_hull(P).rays(); }

Polyhedron path_combine(const Rational& lambda, const Polyhedron& P, const Polyhedron& Q) {
  if (!P.bounded() || !Q.bounded()) throw UnboundedInput("path_combine");
  if (lambda.sign() < 0 || lambda > 1) throw BadParameter("path parameter must lie in [0, 1]");
  const Rational mu = 1 - lambda;
  std::vector<SparseVec> combos;
  combos.reserve(P.vertices().size() * Q.vertices().size());
  for (const auto& p : P.vertices()) {
    for (const auto& q : Q.vertices()) combos.push_back(mu * p + lambda * q);
  }
  return closed_convex_hull(Polyhedron(std::move(combos)));
}

bool polar_contains(const SparseVec& sigma, const PolarSpec& U) { return l1_norm(sigma) <= U.radius; }

bool same_hull(const Polyhedron& P, const Polyhedron& Q) {
  auto contained = [](const Polyhedron& a, const Polyhedron& b) {
    for (const auto& v : a.vertices()) {
      if (!membership(v, b)) return false;
    }
    for (const auto& r : a.rays()) {
      if (!in_cone(r, b.rays())) return false;
    }
    return true;
  };
  return contained(P, Q) && contained(Q, P);
}

}  // namespace hyperspace
