#include <doctest.h>

#include "hyperspace/errors.hpp"
#include "hyperspace/hypermetrics.hpp"
#include "oracles.hpp"

using namespace hyperspace;

namespace {

SparseVec e(SparseVec::Index k, Rational v = 1) { return SparseVec::unit(k, v); }

HyperSet finite_set(gen::Rng& rng, std::size_t dims) {
  std::vector<SparseVec> pts;
  const int n = 1 + static_cast<int>(rng() % 5);
  for (int i = 0; i < n; ++i) pts.push_back(gen::vector(rng, dims, 5, 3));
  return PointSet(pts);
}

}  // namespace

TEST_CASE("pseudometric examples") {
  CHECK(pseudometric_dH(PointSet({SparseVec{}}), PointSet({e(0)}), e(0)) == Extended(1));
  const HyperSet F = Polyhedron({e(0), e(1, 3)});
  CHECK(pseudometric_dH(F, F, e(1)) == Extended(0));
  for (SparseVec::Index m = 1; m <= 6; ++m) {
    CHECK(pseudometric_dH(PointSet({e(m, pow2(static_cast<int>(m)))}), PointSet({SparseVec{}}), e(m)) ==
          Extended(pow2(static_cast<int>(m))));
  }
}

TEST_CASE("a set and its hull differ by half the largest gap") {
  gen::Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<SparseVec> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(gen::vector(rng, 2, 7, 2));
    const SparseVec A = gen::vector(rng, 2, 4, 1);
    std::vector<Rational> values;
    for (const auto& p : pts) values.push_back(pair(A, p));
    CHECK(pseudometric_dH(PointSet(pts), Polyhedron(pts), A) == Extended(oracle::half_max_gap(values)));
  }
}

TEST_CASE("infinite distances") {
  const HyperSet bounded = Polyhedron({SparseVec{}, e(0)});
  const HyperSet ray = Polyhedron({SparseVec{}}, {e(0)});
  const HyperSet line = Polyhedron({SparseVec{}}, {e(0), -e(0)});
  CHECK(pseudometric_dH(bounded, ray, e(0)).is_pos_inf());
  CHECK(pseudometric_dH(ray, ray, e(0)) == Extended(0));
  CHECK(pseudometric_dH(line, line, e(0)) == Extended(0));
  CHECK(pseudometric_dH(ray, line, e(0)).is_pos_inf());
  CHECK(pseudometric_dH(ray, Polyhedron({e(0, 2)}, {e(0)}), e(0)) == Extended(2));
  CHECK(pseudometric_dH(PointSet({e(0, 5)}), ray, e(0)).is_pos_inf());
  CHECK(pseudometric_dH(ray, ray, e(1)) == Extended(0));
}

TEST_CASE("each d_H^(A) is a homogeneous pseudometric") {
  gen::Rng rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const HyperSet F = finite_set(rng, 3);
    const HyperSet G = trial % 2 ? HyperSet(gen::polytope(rng, 4, 3)) : finite_set(rng, 3);
    const HyperSet H = finite_set(rng, 3);
    const SparseVec A = gen::vector(rng, 3, 4, 2);
    const Rational alpha = gen::rational(rng, 5, 3);
    const Extended fg = pseudometric_dH(F, G, A);
    CHECK(fg == pseudometric_dH(G, F, A));
    CHECK(pseudometric_dH(F, F, A) == Extended(0));
    CHECK(fg <= pseudometric_dH(F, H, A) + pseudometric_dH(H, G, A));
    CHECK(pseudometric_dH(F, G, alpha * A) == scale(abs(alpha), fg));
  }
}

TEST_CASE("on convex bodies d_H^(A) reduces to support values") {
  gen::Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Polyhedron P = gen::polytope(rng, 5, 3);
    const Polyhedron Q = gen::polytope(rng, 5, 3);
    const SparseVec A = gen::vector(rng, 3, 4, 1);
    const Extended expected = std::max(abs_difference(support_value(P, A), support_value(Q, A)),
                                       abs_difference(support_value(P, -A), support_value(Q, -A)));
    CHECK(pseudometric_dH(P, Q, A) == expected);
  }
}

TEST_CASE("metric d examples") {
  const MetricConfig cfg;
  CHECK(metric_d(e(0), e(0), cfg) == 0);
  CHECK(metric_d(e(0), SparseVec{}, cfg) == Rational(1, 4));
  const Polyhedron K({SparseVec{}, e(1, 2), e(2, 4), e(3, 8), e(4, 16), e(5, 32)});
  const MetricConfig spiky(CoordinateFunctionals{}, K);
  CHECK(metric_d(e(5, 32), SparseVec{}, spiky) == Rational(1, 66));
  CHECK_THROWS_AS(metric_d(e(0, 2), SparseVec{}, cfg), NotInNormalizingSet);
  CHECK_THROWS_AS(MetricConfig(CoordinateFunctionals{}, Polyhedron({SparseVec{}}, {e(0)})), UnboundedInput);
}

TEST_CASE("metric d matches the closed form and is dominated by the l1 norm") {
  gen::Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational r(1 + trial % 3, 1 + trial % 2);
    const SparseVec s = gen::in_polar(rng, 6, r);
    const SparseVec t = gen::in_polar(rng, 6, r);
    const MetricConfig cfg(CoordinateFunctionals{}, PolarSpec{r});
    CHECK(metric_d(s, t, cfg) == oracle::coordinate_metric(s, t, r));
    const SparseVec u = gen::in_polar(rng, 6);
    const SparseVec w = gen::in_polar(rng, 6);
    CHECK(metric_d(u, w, MetricConfig()) <= l1_norm(u - w));
  }
}

TEST_CASE("dense enumeration config") {
  const MetricConfig cfg = MetricConfig::dense_enumeration(40);
  const auto& list = std::get<ExplicitFunctionals>(cfg.functionals()).functionals;
  CHECK(list.size() == 40);
  CHECK(cfg.truncation_bound() == pow2(-39));
  CHECK(MetricConfig().truncation_bound() == 0);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) CHECK(list[i] != list[j]);
  }
  CHECK(metric_d(e(0, Rational(1, 2)), e(1, Rational(1, 3)), cfg).sign() > 0);
  CHECK(cfg.weight(1, list.front()) == Rational(1, 2) / (1 + sup_norm(list.front())));
}

TEST_CASE("Hausdorff metric examples") {
  const MetricConfig cfg;
  const Polyhedron P({e(0, Rational(1, 3)), e(1, Rational(-1, 2))});
  CHECK(hausdorff_full(P, P, cfg) == 0);
  CHECK(hausdorff_full(Polyhedron::point(SparseVec{}), Polyhedron::point(e(0)), cfg) == Rational(1, 4));
  CHECK(hausdorff_full(Polyhedron({SparseVec{}, e(0)}), Polyhedron::point(SparseVec{}), cfg) == Rational(1, 4));
  CHECK_THROWS_AS(hausdorff_full(Polyhedron({SparseVec{}}, {e(0)}), P, cfg), UnboundedInput);
  CHECK_THROWS_AS(hausdorff_full(Polyhedron::point(e(0, 3)), P, cfg), NotInNormalizingSet);
}

TEST_CASE("Hausdorff metric on segments matches the endpoint formula") {
  gen::Rng rng(41);
  std::uniform_int_distribution<long> num(-8, 8);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational a1(num(rng), 8), a2(num(rng), 8), b1(num(rng), 8), b2(num(rng), 8);
    const Polyhedron A({e(0, a1), e(0, a2)});
    const Polyhedron B({e(0, b1), e(0, b2)});
    CHECK(hausdorff_full(A, B, MetricConfig()) == oracle::segment_hausdorff(a1, a2, b1, b2));
  }
}

TEST_CASE("the Hausdorff metric separates hulls") {
  gen::Rng rng(44);
  const MetricConfig cfg;
  for (int trial = 0; trial < 30; ++trial) {
    const Polyhedron P = gen::polytope(rng, 5, 3);
    const Polyhedron Q = trial % 3 == 0 ? Polyhedron(P.vertices()) : gen::polytope(rng, 5, 3);
    const Rational d = hausdorff_full(P, Q, cfg);
    CHECK((d.is_zero() == same_hull(P, Q)));
    const Polyhedron R = gen::polytope(rng, 4, 3);
    CHECK(d <= hausdorff_full(P, R, cfg) + hausdorff_full(R, Q, cfg));
  }
}

TEST_CASE("separating directions") {
  const auto a = separating_direction(Polyhedron::point(SparseVec{}), Polyhedron::point(e(0)));
  REQUIRE(a);
  CHECK(*a == e(0));
  CHECK(pseudometric_dH(Polyhedron::point(SparseVec{}), Polyhedron::point(e(0)), *a) == Extended(1));

  const SparseVec c = SparseVec::dense({Rational(1, 2), Rational(1, 2)});
  const Polyhedron square({SparseVec{}, e(0), e(1), e(0) + e(1)});
  CHECK_FALSE(separating_direction(square, Polyhedron({SparseVec{}, e(0), e(1), e(0) + e(1), c})));

  const Polyhedron triangle({SparseVec{}, e(0), e(1)});
  const Polyhedron edge({SparseVec{}, e(0)});
  const auto t = separating_direction(triangle, edge);
  REQUIRE(t);
  CHECK(pseudometric_dH(triangle, edge, *t) > Extended(0));

  // Separation that needs a non-coordinate functional.
  const Polyhedron diag({e(0), e(1)});
  const auto d = separating_direction(Polyhedron::point(SparseVec::dense({Rational(1, 4), Rational(1, 4)})), diag);
  REQUIRE(d);
  CHECK(pseudometric_dH(Polyhedron::point(SparseVec::dense({Rational(1, 4), Rational(1, 4)})), diag, *d) >
        Extended(0));
}

TEST_CASE("immeasurable witnesses") {
  const Polyhedron seg({SparseVec{}, e(0)});
  const Polyhedron ray({SparseVec{}}, {e(0)});
  const auto w = immeasurable_witness(seg, ray);
  REQUIRE(w);
  CHECK(*w == e(0));
  CHECK(pseudometric_dH(seg, ray, *w).is_pos_inf());
  CHECK_FALSE(immeasurable_witness(seg, Polyhedron({e(1)})));

  const Polyhedron r1({SparseVec{}}, {e(0)});
  const Polyhedron r2({e(1), e(2)}, {e(0, 3)});
  CHECK_FALSE(immeasurable_witness(r1, r2));
  gen::Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    const SparseVec A = gen::vector(rng, 3, 5, 1);
    const Extended d = pseudometric_dH(r1, r2, A);
    if (A[0].is_zero()) CHECK(d.is_finite());
  }

  const Polyhedron cone({SparseVec{}}, {e(0) + e(1), e(0) - e(1)});
  const Polyhedron narrow({SparseVec{}}, {e(0)});
  const auto n = immeasurable_witness(narrow, cone);
  REQUIRE(n);
  CHECK(pseudometric_dH(narrow, cone, *n).is_pos_inf());
}

TEST_CASE("cylinder boundedness and clopen formulas") {
  const Polyhedron bounded({e(0), e(1)});
  const Polyhedron ray1({SparseVec{}}, {e(1)});
  const CylinderSpec over0{{e(0)}};
  const CylinderSpec over1{{e(1)}};
  CHECK(cylinder_bounded(bounded, over1));
  CHECK(cylinder_bounded(ray1, over0));
  CHECK_FALSE(cylinder_bounded(ray1, over1));

  const auto any = ClopenExpr::bounded_in(CylinderSpec{});
  CHECK(clopen_eval(any, ray1));
  CHECK(clopen_eval(any, bounded));
  const auto expr = ClopenExpr::bounded_in(over0) && !ClopenExpr::bounded_in(over1);
  CHECK(clopen_eval(expr, ray1));
  CHECK_FALSE(clopen_eval(expr, bounded));

  const std::vector<Polyhedron> sets{bounded, ray1, Polyhedron({SparseVec{}}, {e(0)}),
                                     Polyhedron({SparseVec{}}, {e(0), e(1)})};
  const std::vector<ClopenExpr> atoms{ClopenExpr::bounded_in(over0), ClopenExpr::bounded_in(over1),
                                      ClopenExpr::bounded_in(CylinderSpec{{e(0) + e(1)}})};
  for (const auto& P : sets) {
    for (const auto& a : atoms) {
      for (const auto& b : atoms) {
        CHECK(clopen_eval(!(a && b), P) == clopen_eval(!a || !b, P));
        CHECK(clopen_eval(!(a || b), P) == clopen_eval(!a && !b, P));
      }
    }
  }
}
