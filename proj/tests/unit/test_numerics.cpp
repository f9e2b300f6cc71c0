#include <doctest.h>

#include "hyperspace/errors.hpp"
#include "hyperspace/rational.hpp"
#include "hyperspace/sparse_vec.hpp"
#include "oracles.hpp"

using namespace hyperspace;

TEST_CASE("rational text round-trips in canonical form") {
  CHECK(format_rational(Rational(5)) == "5/1");
  CHECK(format_rational(Rational(-6, 8)) == "-3/4");
  CHECK(format_rational(Rational(0)) == "0/1");
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("3/9") == Rational(1, 3));

  gen::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational q = gen::rational(rng, 1000, 97);
    CHECK(parse_rational(format_rational(q)) == q);
  }
}

TEST_CASE("malformed rationals are parse errors") {
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("pow2 and approx_decimal") {
  CHECK(pow2(5) == 32);
  CHECK(pow2(-3) == Rational(1, 8));
  CHECK(pow2(0) == 1);
  CHECK(approx_decimal(Rational(1, 4), 4) == "0.25");
  CHECK(approx_decimal(Rational(1, 3), 4) == "0.3333");
}

TEST_CASE("extended rationals order and add with infinities") {
  const Extended inf = Extended::pos_inf();
  const Extended ninf = Extended::neg_inf();
  CHECK(ninf < Extended(-1000));
  CHECK(Extended(1000) < inf);
  CHECK(inf == inf);
  CHECK((inf + Extended(3)).is_pos_inf());
  CHECK((Extended(Rational(1, 2)) + Extended(Rational(1, 3))) == Extended(Rational(5, 6)));
  CHECK_THROWS(inf + ninf);
  CHECK(abs_difference(inf, inf) == Extended(0));
  CHECK(abs_difference(inf, Extended(2)).is_pos_inf());
  CHECK(abs_difference(ninf, inf).is_pos_inf());
  CHECK(abs_difference(Extended(2), Extended(-3)) == Extended(5));
  CHECK(scale(Rational(0), inf) == Extended(0));
  CHECK(scale(Rational(2), Extended(3)) == Extended(6));
  CHECK((-inf).is_neg_inf());
  CHECK(inf.str() == "inf");
  CHECK(ninf.str() == "-inf");
  CHECK_THROWS(inf.value());
}

TEST_CASE("sparse vectors keep a canonical entry list") {
  const SparseVec v{{3, Rational(1)}, {0, Rational(2)}, {3, Rational(-1)}, {5, Rational(0)}};
  CHECK(v.size() == 1);
  CHECK(v[0] == 2);
  CHECK(v[3] == 0);
  CHECK(v.support() == std::vector<SparseVec::Index>{0});

  const SparseVec a{{0, Rational(3)}, {1, Rational(-2)}};
  const SparseVec b{{1, Rational(2)}, {7, Rational(1, 2)}};
  CHECK(a + b == SparseVec{{0, Rational(3)}, {7, Rational(1, 2)}});
  CHECK(a - a == SparseVec{});
  CHECK(Rational(0) * a == SparseVec{});
  CHECK(-a == SparseVec{{0, Rational(-3)}, {1, Rational(2)}});
  CHECK(pair(a, b) == -4);
  CHECK(l1_norm(a) == 5);
  CHECK(sup_norm(a) == 3);
  CHECK(sup_norm(SparseVec{}) == 0);
  CHECK(coordinate_sum(a) == 1);
  CHECK(max_index(b) == SparseVec::Index{7});
  CHECK_FALSE(max_index(SparseVec{}).has_value());
  CHECK(SparseVec::unit(4, Rational(2))[4] == 2);
  CHECK(SparseVec::dense({Rational(0), Rational(1)}) == SparseVec::unit(1));
}

TEST_CASE("vector arithmetic identities on random inputs") {
  gen::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const SparseVec x = gen::vector(rng, 6, 9, 4);
    const SparseVec y = gen::vector(rng, 6, 9, 3);
    const SparseVec A = gen::vector(rng, 6, 5, 2);
    const Rational t = gen::rational(rng, 7, 5);
    CHECK(pair(A, x + y) == pair(A, x) + pair(A, y));
    CHECK(pair(A, t * x) == t * pair(A, x));
    CHECK(l1_norm(x + y) <= l1_norm(x) + l1_norm(y));
    CHECK(abs(pair(A, x)) <= sup_norm(A) * l1_norm(x));
    CHECK((x + y) - y == x);
  }
}
