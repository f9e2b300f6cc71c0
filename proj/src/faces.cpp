#include "hyperspace/faces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hyperspace/errors.hpp"
#include "hyperspace/lp.hpp"

namespace hyperspace {

namespace {

Rational margin_against(const SparseVec& A, const SparseVec& v, const std::vector<SparseVec>& vertices) {
  std::optional<Rational> margin;
  const Rational top = pair(A, v);
  for (const auto& w : vertices) {
    if (w == v) continue;
    Rational gap = top - pair(A, w);
    if (!margin || gap < *margin) margin = std::move(gap);
  }
  return margin.value_or(Rational(1));
}

// Nearest rational with denominator `den`.
Rational round_to(double x, long den) { return Rational(std::llround(x * static_cast<double>(den)), den); }

SparseVec circle_point(const Rational& t, const Rational& shift_x, bool mirror) {
  const Rational denom = 1 + t * t;
  Rational x = shift_x + (1 - t * t) / denom;
  if (mirror) x = -x;
  return SparseVec::dense({x, 2 * t / denom});
}

}  // namespace

ExposureCertificate exposure_certificate(const Polyhedron& P, const SparseVec& v) {
  if (!P.bounded()) throw UnboundedInput("exposure_certificate");
  const auto& vertices = P.vertices();
  if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) throw NotAVertex(v.str());
  std::vector<const SparseVec*> others;
  for (const auto& w : vertices) {
    if (w != v) others.push_back(&w);
  }
  if (others.empty()) return {v, SparseVec{}, Rational(1)};

  // Variables: A_m for each coordinate in the joint support, then delta.
  const auto coords = joint_support({&vertices});
  const std::size_t delta = coords.size();
  LpProblem lp;
  for (const auto* w : others) {
    const SparseVec diff = v - *w;
    std::vector<SparseVec::Entry> row{{delta, Rational(1)}};
    for (std::size_t j = 0; j < coords.size(); ++j) row.emplace_back(j, -diff[coords[j]]);
    lp.add_row(SparseVec(std::move(row)), Relation::less_equal, 0);
  }
  for (std::size_t j = 0; j < coords.size(); ++j) {
    lp.add_row(SparseVec::unit(j), Relation::less_equal, 1);
    lp.add_row(SparseVec::unit(j), Relation::greater_equal, -1);
  }
  lp.objective = SparseVec::unit(delta);

  const auto outcome = lp_solve(lp, Sense::maximize);
  const auto& opt = std::get<LpOptimal>(outcome);
  if (opt.value.sign() <= 0) throw NotAVertex(v.str());
  std::vector<SparseVec::Entry> a;
  for (std::size_t j = 0; j < coords.size(); ++j) a.emplace_back(coords[j], opt.point[j]);
  SparseVec A(std::move(a));
  Rational margin = margin_against(A, v, vertices);
  return {v, std::move(A), std::move(margin)};
}

std::vector<ExposureCertificate> exposed_all(const Polyhedron& P) {
  if (!P.bounded()) throw UnboundedInput("exposed_all");
  const Polyhedron hull = closed_convex_hull(P);
  std::vector<ExposureCertificate> out;
  for (const auto& v : hull.vertices()) out.push_back(exposure_certificate(hull, v));
  return out;
}

bool check_certificate(const ExposureCertificate& cert, const std::vector<SparseVec>& vertices) {
  if (std::find(vertices.begin(), vertices.end(), cert.vertex) == vertices.end()) return false;
  if (vertices.size() == 1) return cert.margin.sign() > 0;
  const Rational margin = margin_against(cert.functional, cert.vertex, vertices);
  return margin.sign() > 0 && margin == cert.margin;
}

bool DeviationEstimate::at_least_inverse(std::size_t m) const {
  return m > 0 && lower >= Rational(1, static_cast<long>(m));
}

DeviationEstimate extreme_deviation(const Polyhedron& P, const MetricConfig& cfg, std::size_t budget,
                                    std::uint64_t seed) {
  if (!P.bounded()) throw UnboundedInput("extreme_deviation");
  const auto vertices = closed_convex_hull(P).vertices();
  const std::size_t nv = vertices.size();

  DeviationEstimate est;
  est.witness = vertices.front();
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t j = i + 1; j < nv; ++j) est.upper = std::max(est.upper, metric_d(vertices[i], vertices[j], cfg));
  }
  if (nv == 1) {
    metric_d(vertices.front(), vertices.front(), cfg);
    return est;
  }

  auto consider = [&](const SparseVec& sigma) {
    Rational nearest = metric_d(sigma, vertices.front(), cfg);
    for (std::size_t i = 1; i < nv && nearest.sign() > 0; ++i) nearest = std::min(nearest, metric_d(sigma, vertices[i], cfg));
    if (nearest > est.lower) {
      est.lower = nearest;
      est.witness = sigma;
    }
    ++est.samples;
  };

  if (budget == 0) return est;
  SparseVec bary;
  for (const auto& v : vertices) bary += v;
  bary *= Rational(1, static_cast<long>(nv));
  consider(bary);
  for (std::size_t i = 0; i < nv && est.samples < budget; ++i) {
    for (std::size_t j = i + 1; j < nv && est.samples < budget; ++j) {
      consider(Rational(1, 2) * (vertices[i] + vertices[j]));
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> weight(0, 16);
  while (est.samples < budget) {
    std::vector<long> w(nv);
    long total = 0;
    for (auto& x : w) total += (x = weight(rng));
    if (total == 0) continue;
    SparseVec sigma;
    for (std::size_t i = 0; i < nv; ++i) {
      if (w[i] != 0) sigma += Rational(w[i], total) * vertices[i];
    }
    consider(sigma);
  }
  return est;
}

Polyhedron stadium_family(std::size_t n) {
  if (n < 8 || n % 2 != 0) throw BadParameter("stadium_family needs an even n >= 8");
  const std::size_t m = (n - 4) / 2;
  std::vector<SparseVec> points;
  for (int sx : {1, -1}) {
    for (int sy : {1, -1}) points.push_back(SparseVec::dense({Rational(sx), Rational(sy)}));
  }
  for (std::size_t i = 1; i <= m; ++i) {
    const Rational t = -1 + Rational(2 * static_cast<long>(i), static_cast<long>(m + 1));
    points.push_back(circle_point(t, 1, false));
    points.push_back(circle_point(t, 1, true));
  }
  return Polyhedron(std::move(points), {}, false);
}

Polyhedron inscribed_polygon(unsigned k) {
  if (k < 2 || k > 20) throw BadParameter("inscribed_polygon needs 2 <= k <= 20");
  const std::size_t count = std::size_t{1} << k;
  const long den = 1L << 24;
  std::vector<SparseVec> points;
  for (std::size_t i = 0; i < count; ++i) {
    const double theta = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(count);
    if (2 * i == count) {
      points.push_back(SparseVec::dense({Rational(-1), Rational(0)}));
      continue;
    }
    points.push_back(circle_point(round_to(std::tan(theta / 2), den), 0, false));
  }
  return Polyhedron(std::move(points), {}, true);
}

Rational polygon_vertex_gap(const Polyhedron& P, std::size_t directions, std::uint64_t seed) {
  const HyperSet body = P;
  const HyperSet corners = PointSet(P.vertices());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-1000, 1000);
  const auto coords = joint_support({&P.vertices()});
  Rational best = 0;
  for (std::size_t d = 0; d < directions; ++d) {
    std::vector<SparseVec::Entry> entries;
    for (auto m : coords) entries.emplace_back(m, Rational(coord(rng), 1000));
    const Extended gap = pseudometric_dH(body, corners, SparseVec(std::move(entries)));
    best = std::max(best, gap.value());
  }
  return best;
}

}  // namespace hyperspace
