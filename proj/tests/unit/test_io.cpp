#include <doctest.h>

#include "hyperspace/errors.hpp"
#include "hyperspace/io.hpp"
#include "oracles.hpp"

using namespace hyperspace;
using io::Json;

namespace {

SparseVec e(SparseVec::Index k, Rational v = 1) { return SparseVec::unit(k, v); }

}  // namespace

TEST_CASE("vectors and rationals") {
  CHECK(io::encode(e(3, Rational(-1, 2))).dump() == R"([[3,"-1/2"]])");
  CHECK(io::decode_vector(Json::parse(R"([[0,"2/4"],[5,"3"]])")) == e(0, Rational(1, 2)) + e(5, 3));
  CHECK(io::decode_rational(Json(7)) == 7);
  CHECK_THROWS_AS(io::decode_rational(Json(0.5)), ParseError);
  CHECK_THROWS_AS(io::decode_vector(Json::parse(R"([[0,"1/2"],[0,"1/3"]])")), ParseError);
  CHECK_THROWS_AS(io::decode_vector(Json::parse(R"([[-1,"1/2"]])")), ParseError);
  CHECK_THROWS_AS(io::decode_vector(Json::parse(R"({"a":1})")), ParseError);
}

TEST_CASE("set documents round-trip") {
  gen::Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    const Polyhedron P = gen::polytope(rng, 5, 4);
    const Polyhedron hull = closed_convex_hull(P);
    CHECK(std::get<Polyhedron>(io::decode_set(io::encode(P))) == P);
    CHECK(std::get<Polyhedron>(io::decode_set(io::encode(hull))) == hull);
    const HyperSet F = PointSet(P.vertices());
    CHECK(io::decode_set(io::encode(F)) == F);
  }
  const Polyhedron ray({SparseVec{}}, {e(1)}, true);
  CHECK(io::decode_polyhedron(io::encode(ray)) == ray);
}

TEST_CASE("a false irredundant claim is rejected") {
  Json doc = io::encode(Polyhedron({SparseVec{}, e(0), e(0, Rational(1, 2))}));
  doc["irredundant"] = true;
  CHECK_THROWS_AS(io::decode_set(doc), ParseError);
  CHECK_THROWS_AS(io::decode_set(Json::parse(R"({"kind":"points","points":[]})")), ParseError);
  CHECK_THROWS_AS(io::decode_set(Json::parse(R"({"kind":"blob"})")), ParseError);
}

TEST_CASE("configs, cylinders and clopen formulas round-trip") {
  const MetricConfig a;
  CHECK(io::decode_metric_config(io::encode(a)) == a);
  const MetricConfig b = MetricConfig::dense_enumeration(12, PolarSpec{Rational(3, 2)});
  CHECK(io::decode_metric_config(io::encode(b)) == b);
  const MetricConfig c(CoordinateFunctionals{}, Polyhedron({SparseVec{}, e(1, 2)}));
  CHECK(io::decode_metric_config(io::encode(c)) == c);

  const CylinderSpec cyl{{e(0), e(1) + e(2)}};
  CHECK(io::decode_cylinder(io::encode(cyl)) == cyl);
  const auto expr = (ClopenExpr::bounded_in(cyl) || !ClopenExpr::bounded_in(CylinderSpec{})) &&
                    ClopenExpr::bounded_in(CylinderSpec{{e(4)}});
  CHECK(io::decode_clopen(io::encode(expr)) == expr);
  CHECK_THROWS_AS(io::decode_clopen(Json::parse(R"({"kind":"clopen","expr":{"xor":[]}})")), ParseError);
}

TEST_CASE("certificates and traces round-trip") {
  const Polyhedron U({e(0, Rational(1, 2)), SparseVec{}});
  const auto run = construct(U, PolarSpec{}, Rational(1, 2), 3, Variant::plain, 2);
  const PoulsenTrace back = io::decode_trace(io::encode(run.trace));
  CHECK(io::encode(back) == io::encode(run.trace));
  CHECK(verify_trace(U, PolarSpec{}, run.result, back).all_passed());

  const auto certs = exposed_all(U);
  const auto decoded = io::decode_certificates(io::encode_certificates(certs));
  CHECK(decoded == certs);
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "hyperspace_io_test";
  const Json doc = io::encode(Polyhedron({e(0), e(1)}));
  io::write_file(dir / "set.json", doc);
  CHECK(io::read_file(dir / "set.json") == doc);
  CHECK_THROWS_AS(io::read_file(dir / "missing.json"), ParseError);
  std::filesystem::remove_all(dir);
}
