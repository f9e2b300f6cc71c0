#include "hyperspace/io.hpp"

#include <fstream>
#include <limits>

#include "hyperspace/errors.hpp"

namespace hyperspace::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::string text_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::uint64_t count_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ParseError(std::string("field '") + key + "' must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

bool flag_field(const Json& j, const char* key, bool fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) throw ParseError(std::string("field '") + key + "' must be a boolean");
  return it->get<bool>();
}

void expect_kind(const Json& j, const std::string& kind) {
  if (text_field(j, "kind") != kind) throw ParseError("expected a '" + kind + "' document");
}

Json encode_key(const Scheduler::Key& k) { return Json::array({k.first, k.second}); }

Scheduler::Key decode_key(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned()) {
    throw ParseError("schedule entries are [stage, index] pairs");
  }
  return {j[0].get<std::size_t>(), j[1].get<std::size_t>()};
}

}  // namespace

Json encode(const Rational& q) { return format_rational(q); }

Rational decode_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("rationals are written as \"num/den\" strings, got " + j.dump());
}

Json encode(const SparseVec& v) {
  Json out = Json::array();
  for (const auto& [k, x] : v.entries()) out.push_back(Json::array({k, format_rational(x)}));
  return out;
}

SparseVec decode_vector(const Json& j) {
  if (!j.is_array()) throw ParseError("a vector is a list of [index, value] pairs");
  std::vector<SparseVec::Entry> entries;
  std::vector<SparseVec::Index> seen;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned()) {
      throw ParseError("vector entries are [index, \"num/den\"] pairs, got " + e.dump());
    }
    const auto k = e[0].get<SparseVec::Index>();
    if (std::find(seen.begin(), seen.end(), k) != seen.end()) {
      throw ParseError("duplicate index " + std::to_string(k) + " in vector");
    }
    seen.push_back(k);
    entries.emplace_back(k, decode_rational(e[1]));
  }
  return SparseVec(std::move(entries));
}

Json encode_vectors(const std::vector<SparseVec>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(encode(v));
  return out;
}

std::vector<SparseVec> decode_vectors(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a list of vectors");
  std::vector<SparseVec> out;
  for (const auto& v : j) out.push_back(decode_vector(v));
  return out;
}

Json encode(const Polyhedron& P) {
  return Json{{"kind", "polyhedron"},
              {"points", encode_vectors(P.vertices())},
              {"rays", encode_vectors(P.rays())},
              {"irredundant", P.irredundant()}};
}

Json encode(const HyperSet& set) {
  if (const auto* P = std::get_if<Polyhedron>(&set)) return encode(*P);
  return Json{{"kind", "points"}, {"points", encode_vectors(std::get<PointSet>(set).points())}};
}

HyperSet decode_set(const Json& j) {
  const std::string kind = text_field(j, "kind");
  try {
    if (kind == "points") return PointSet(decode_vectors(field(j, "points")));
    if (kind != "polyhedron") throw ParseError("unknown set kind '" + kind + "'");
    std::vector<SparseVec> rays;
    if (j.contains("rays")) rays = decode_vectors(j.at("rays"));
    const bool claimed = flag_field(j, "irredundant", false);
    Polyhedron P(decode_vectors(field(j, "points")), std::move(rays));
    if (!claimed) return P;
    const Polyhedron hull = closed_convex_hull(P);
    if (hull.vertices() != P.vertices() || hull.rays() != P.rays()) {
      throw ParseError("set marked irredundant has redundant generators");
    }
    return hull;
  } catch (const BadParameter& e) {
    throw ParseError(e.what());
  }
}

Polyhedron decode_polyhedron(const Json& j) {
  const HyperSet set = decode_set(j);
  if (const auto* P = std::get_if<Polyhedron>(&set)) return *P;
  return Polyhedron(std::get<PointSet>(set).points());
}

Json encode(const MetricConfig& cfg) {
  Json out{{"kind", "metric_config"}};
  if (const auto* ex = std::get_if<ExplicitFunctionals>(&cfg.functionals())) {
    out["functionals"] = Json{{"explicit", encode_vectors(ex->functionals)}};
  } else {
    out["functionals"] = "coordinate";
  }
  if (const auto* polar = std::get_if<PolarSpec>(&cfg.normalizing_set())) {
    out["normalizing_set"] = Json{{"kind", "polar"}, {"radius", encode(polar->radius)}};
  } else {
    out["normalizing_set"] = encode(std::get<Polyhedron>(cfg.normalizing_set()));
  }
  return out;
}

MetricConfig decode_metric_config(const Json& j) {
  expect_kind(j, "metric_config");
  TestFunctionals functionals = CoordinateFunctionals{};
  const Json& f = field(j, "functionals");
  if (f.is_object()) {
    functionals = ExplicitFunctionals{decode_vectors(field(f, "explicit"))};
  } else if (f != "coordinate") {
    throw ParseError("functionals must be \"coordinate\" or {\"explicit\": [...]}");
  }
  NormalizingSet normalizing = PolarSpec{};
  if (j.contains("normalizing_set")) {
    const Json& n = j.at("normalizing_set");
    if (text_field(n, "kind") == "polar") {
      normalizing = PolarSpec{decode_rational(field(n, "radius"))};
    } else {
      normalizing = decode_polyhedron(n);
    }
  }
  try {
    return MetricConfig(std::move(functionals), std::move(normalizing));
  } catch (const BadParameter& e) {
    throw ParseError(e.what());
  }
}

Json encode(const CylinderSpec& v) { return Json{{"kind", "cylinder"}, {"generators", encode_vectors(v.generators)}}; }

CylinderSpec decode_cylinder(const Json& j) {
  expect_kind(j, "cylinder");
  return CylinderSpec{decode_vectors(field(j, "generators"))};
}

namespace {

Json encode_expr(const ClopenExpr& e) {
  Json children = Json::array();
  for (const auto& c : e.children()) children.push_back(encode_expr(c));
  switch (e.op()) {
    case ClopenExpr::Op::atom: return Json{{"bounded_in", encode_vectors(e.cylinder().generators)}};
    case ClopenExpr::Op::all_of: return Json{{"all_of", children}};
    case ClopenExpr::Op::any_of: return Json{{"any_of", children}};
    case ClopenExpr::Op::negation: break;
  }
  return Json{{"not", children.front()}};
}

ClopenExpr decode_expr(const Json& j) {
  if (!j.is_object() || j.size() != 1) throw ParseError("clopen expression must have exactly one operator");
  const auto& [op, arg] = *j.items().begin();
  auto list = [&] {
    if (!arg.is_array()) throw ParseError("'" + op + "' takes a list");
    std::vector<ClopenExpr> out;
    for (const auto& c : arg) out.push_back(decode_expr(c));
    return out;
  };
  if (op == "bounded_in") return ClopenExpr::bounded_in(CylinderSpec{decode_vectors(arg)});
  if (op == "all_of") return ClopenExpr::all_of(list());
  if (op == "any_of") return ClopenExpr::any_of(list());
  if (op == "not") return ClopenExpr::negation(decode_expr(arg));
  throw ParseError("unknown clopen operator '" + op + "'");
}

}  // namespace

Json encode(const ClopenExpr& e) { return Json{{"kind", "clopen"}, {"expr", encode_expr(e)}}; }

ClopenExpr decode_clopen(const Json& j) {
  expect_kind(j, "clopen");
  return decode_expr(field(j, "expr"));
}

Json encode(const ExposureCertificate& c) {
  return Json{{"vertex", encode(c.vertex)}, {"functional", encode(c.functional)}, {"margin", encode(c.margin)}};
}

ExposureCertificate decode_certificate(const Json& j) {
  return {decode_vector(field(j, "vertex")), decode_vector(field(j, "functional")), decode_rational(field(j, "margin"))};
}

Json encode_certificates(const std::vector<ExposureCertificate>& cs) {
  Json list = Json::array();
  for (const auto& c : cs) list.push_back(encode(c));
  return Json{{"kind", "certificates"}, {"certificates", list}};
}

std::vector<ExposureCertificate> decode_certificates(const Json& j) {
  expect_kind(j, "certificates");
  std::vector<ExposureCertificate> out;
  for (const auto& c : field(j, "certificates")) out.push_back(decode_certificate(c));
  return out;
}

Json encode(const PoulsenTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back(Json{{"n", s.n},
                         {"fresh_coordinate", s.fresh_coordinate},
                         {"c", encode(s.c)},
                         {"sigma", encode(s.sigma)},
                         {"functional", encode(s.functional)},
                         {"lambda", encode(s.lambda)},
                         {"drawn", encode_key(s.drawn)},
                         {"varpi", encode(s.varpi)},
                         {"omega", encode(s.omega)},
                         {"certificate", encode(s.certificate)}});
  }
  Json queue = Json::array();
  for (const auto& k : t.schedule_state) queue.push_back(encode_key(k));
  return Json{{"kind", "poulsen_trace"},
              {"epsilon", encode(t.epsilon)},
              {"radius", encode(t.radius)},
              {"variant", to_string(t.variant)},
              {"seed", t.seed},
              {"steps", steps},
              {"schedule_state", queue}};
}

PoulsenTrace decode_trace(const Json& j) {
  expect_kind(j, "poulsen_trace");
  PoulsenTrace t;
  t.epsilon = decode_rational(field(j, "epsilon"));
  t.radius = decode_rational(field(j, "radius"));
  t.variant = parse_variant(text_field(j, "variant"));
  t.seed = count_field(j, "seed");
  for (const auto& s : field(j, "steps")) {
    PoulsenStep step;
    step.n = count_field(s, "n");
    step.fresh_coordinate = count_field(s, "fresh_coordinate");
    step.c = decode_rational(field(s, "c"));
    step.sigma = decode_vector(field(s, "sigma"));
    step.functional = decode_vector(field(s, "functional"));
    step.lambda = decode_rational(field(s, "lambda"));
    step.drawn = decode_key(field(s, "drawn"));
    step.varpi = decode_vector(field(s, "varpi"));
    step.omega = decode_vector(field(s, "omega"));
    step.certificate = decode_certificate(field(s, "certificate"));
    t.steps.push_back(std::move(step));
  }
  for (const auto& k : field(j, "schedule_state")) t.schedule_state.push_back(decode_key(k));
  return t;
}

Json encode(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"kind", "verification_report"}, {"all_passed", r.all_passed()}, {"checks", checks}};
}

Json encode(const DeviationEstimate& d) {
  return Json{{"kind", "extreme_deviation"},
              {"lower", encode(d.lower)},
              {"upper", encode(d.upper)},
              {"witness", encode(d.witness)},
              {"samples", d.samples}};
}

Json encode(const LiLsReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json distances = Json::array();
    for (const auto& d : e.distances) distances.push_back(encode(d));
    entries.push_back(
        Json{{"candidate", encode(e.candidate)}, {"distances", distances}, {"in_li", e.in_li}, {"in_ls", e.in_ls}});
  }
  const std::string rule = "in_li: distance <= tolerance at every index of the window; in_ls: at no fewer than " +
                           format_rational(r.ls_fraction) + " of the window";
  return Json{{"kind", "li_ls_report"},
              {"rule", rule},
              {"window", Json::array({r.window_begin, r.window_end})},
              {"entries", entries}};
}

Json encode(const MonotoneLimit& m) {
  Json table = Json::array();
  for (const auto& d : m.table) table.push_back(encode(d));
  return Json{{"kind", "monotone_limit"}, {"limit", encode(m.limit)}, {"table", table}};
}

Json encode(const CounterexampleReport& r) {
  Json distances = Json::array();
  for (std::size_t m = 0; m < r.distances.size(); ++m) {
    distances.push_back(Json{{"m", m + 1}, {"distance", encode(r.distances[m])}});
  }
  return Json{{"kind", "counterexample"},
              {"M", r.M},
              {"set", encode(r.K)},
              {"distances_to_zero", distances},
              {"max_l1_norm", encode(r.max_norm)}};
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const Json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace hyperspace::io
