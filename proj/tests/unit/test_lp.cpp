#include <doctest.h>

#include "hyperspace/lp.hpp"
#include "oracles.hpp"

using namespace hyperspace;

namespace {

SparseVec row(std::initializer_list<long> coeffs) {
  std::vector<SparseVec::Entry> e;
  SparseVec::Index j = 0;
  for (long c : coeffs) e.emplace_back(j++, Rational(c));
  return SparseVec(std::move(e));
}

// Brute force over basic solutions of a two-variable problem with x >= 0:
// every vertex of the feasible region is the intersection of two tight
// constraints taken from the rows and the axes.
std::optional<Rational> brute_force_max(const std::vector<LpRow>& rows, const SparseVec& c) {
  std::vector<std::pair<SparseVec, Rational>> lines;
  for (const auto& r : rows) lines.emplace_back(r.coefficients, r.rhs);
  lines.emplace_back(SparseVec::unit(0), 0);
  lines.emplace_back(SparseVec::unit(1), 0);
  std::optional<Rational> best;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& [a, p] = lines[i];
      const auto& [b, q] = lines[j];
      const Rational det = a[0] * b[1] - a[1] * b[0];
      if (det.is_zero()) continue;
      const SparseVec x = SparseVec::dense({(p * b[1] - q * a[1]) / det, (a[0] * q - b[0] * p) / det});
      bool feasible = x[0].sign() >= 0 && x[1].sign() >= 0;
      for (const auto& r : rows) feasible = feasible && pair(r.coefficients, x) <= r.rhs;
      if (feasible && (!best || pair(c, x) > *best)) best = pair(c, x);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("small programs have the expected outcomes") {
  {
    LpProblem lp;
    lp.objective = row({1});
    lp.add_row(row({1}), Relation::less_equal, 3);
    const auto out = lp_solve(lp, Sense::maximize);
    REQUIRE(std::holds_alternative<LpOptimal>(out));
    CHECK(std::get<LpOptimal>(out).value == 3);
    CHECK(certify(lp, Sense::maximize, out));
  }
  {
    LpProblem lp;
    lp.objective = row({1});
    lp.nonnegative = {0};
    const auto out = lp_solve(lp, Sense::maximize);
    REQUIRE(std::holds_alternative<LpUnbounded>(out));
    CHECK(certify(lp, Sense::maximize, out));
  }
  {
    LpProblem lp;
    lp.objective = row({1, 1});
    lp.nonnegative = {0, 1};
    lp.add_row(row({1, 1}), Relation::less_equal, 1);
    lp.add_row(row({1, -1}), Relation::greater_equal, 2);
    const auto out = lp_solve(lp, Sense::maximize);
    REQUIRE(std::holds_alternative<LpInfeasible>(out));
    CHECK(certify(lp, Sense::maximize, out));
  }
  {
    // min x + 2y, x + y = 4, x - y >= -2, x >= 0, y free: y can go to -inf.
    LpProblem lp;
    lp.objective = row({1, 2});
    lp.nonnegative = {0};
    lp.add_row(row({1, 1}), Relation::equal, 4);
    lp.add_row(row({1, -1}), Relation::greater_equal, -2);
    const auto out = lp_solve(lp, Sense::minimize);
    REQUIRE(std::holds_alternative<LpUnbounded>(out));
    CHECK(certify(lp, Sense::minimize, out));
  }
  {
    LpProblem lp;
    lp.objective = row({1, 2});
    lp.nonnegative = {0, 1};
    lp.add_row(row({1, 1}), Relation::equal, 4);
    lp.add_row(row({1, -1}), Relation::greater_equal, -2);
    const auto out = lp_solve(lp, Sense::minimize);
    REQUIRE(std::holds_alternative<LpOptimal>(out));
    CHECK(std::get<LpOptimal>(out).value == 4);
    CHECK(certify(lp, Sense::minimize, out));
  }
}

TEST_CASE("degenerate and redundant rows") {
  LpProblem lp;
  lp.objective = row({1, 1});
  lp.nonnegative = {0, 1};
  lp.add_row(row({1, 0}), Relation::less_equal, 1);
  lp.add_row(row({0, 1}), Relation::less_equal, 1);
  lp.add_row(row({1, 1}), Relation::less_equal, 2);
  lp.add_row(row({2, 2}), Relation::less_equal, 4);
  lp.add_row(row({1, 1}), Relation::equal, 2);
  const auto out = lp_solve(lp, Sense::maximize);
  REQUIRE(std::holds_alternative<LpOptimal>(out));
  CHECK(std::get<LpOptimal>(out).value == 2);
  CHECK(certify(lp, Sense::maximize, out));
  CHECK(satisfies(lp, std::get<LpOptimal>(out).point));
}

TEST_CASE("random planar programs agree with vertex enumeration") {
  gen::Rng rng(2024);
  std::uniform_int_distribution<long> coef(-6, 6);
  std::uniform_int_distribution<long> rhs(0, 12);
  for (int trial = 0; trial < 150; ++trial) {
    LpProblem lp;
    lp.nonnegative = {0, 1};
    lp.objective = row({coef(rng), coef(rng)});
    const int m = 2 + trial % 4;
    for (int i = 0; i < m; ++i) lp.add_row(row({coef(rng), coef(rng)}), Relation::less_equal, rhs(rng) - 3);
    lp.add_row(row({1, 1}), Relation::less_equal, 20);  // keeps the region bounded
    const auto out = lp_solve(lp, Sense::maximize);
    CHECK(certify(lp, Sense::maximize, out));
    const auto expected = brute_force_max(lp.rows, lp.objective);
    if (expected) {
      REQUIRE(std::holds_alternative<LpOptimal>(out));
      CHECK(std::get<LpOptimal>(out).value == *expected);
    } else {
      CHECK(std::holds_alternative<LpInfeasible>(out));
    }
  }
}

TEST_CASE("random programs with free variables and mixed rows certify") {
  gen::Rng rng(77);
  std::uniform_int_distribution<long> coef(-4, 4);
  std::uniform_int_distribution<int> rel(0, 2);
  for (int trial = 0; trial < 150; ++trial) {
    LpProblem lp;
    const std::size_t n = 2 + trial % 4;
    for (std::size_t j = 0; j < n; ++j) {
      if (coef(rng) > -2) lp.nonnegative.insert(j);
    }
    lp.objective = gen::vector(rng, n, 4, 1);
    const int m = 1 + trial % 5;
    for (int i = 0; i < m; ++i) {
      lp.add_row(gen::vector(rng, n, 4, 1), static_cast<Relation>(rel(rng)), Rational(coef(rng)));
    }
    for (Sense s : {Sense::maximize, Sense::minimize}) {
      const auto out = lp_solve(lp, s);
      CHECK(certify(lp, s, out));
    }
  }
}

TEST_CASE("a tampered certificate is rejected") {
  LpProblem lp;
  lp.objective = row({1});
  lp.add_row(row({1}), Relation::less_equal, 3);
  auto out = lp_solve(lp, Sense::maximize);
  std::get<LpOptimal>(out).value = 4;
  CHECK_FALSE(certify(lp, Sense::maximize, out));
}
