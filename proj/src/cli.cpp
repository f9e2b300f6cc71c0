#include "hyperspace/cli.hpp"

#include <functional>
#include <ostream>
#include <regex>

#include <CLI11.hpp>

#include "hyperspace/errors.hpp"
#include "hyperspace/faces.hpp"
#include "hyperspace/io.hpp"
#include "hyperspace/limits.hpp"
#include "hyperspace/poulsen.hpp"

namespace hyperspace::cli {

namespace {

using io::Json;
namespace fs = std::filesystem;

/// Inline JSON when the text starts like a document, otherwise a file path.
Json load(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    try {
      return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what());
    }
  }
  return io::read_file(text);
}

SparseVec load_vector(const std::string& text) {
  static const std::regex unit(R"((-?)e(\d+))");
  std::smatch m;
  if (std::regex_match(text, m, unit)) {
    return SparseVec::unit(std::stoull(m[2].str()), Rational(m[1].length() > 0 ? -1 : 1));
  }
  const Json j = load(text);
  if (j.is_object()) {
    if (j.value("kind", "") != "vector") throw ParseError("expected a 'vector' document");
    return io::decode_vector(j.at("vector"));
  }
  return io::decode_vector(j);
}

std::string label(const SparseVec& v) {
  if (v.size() == 1 && abs(v.entries().front().second) == 1) {
    return (v.entries().front().second.sign() < 0 ? "-e" : "e") + std::to_string(v.entries().front().first);
  }
  return v.str();
}

MetricConfig load_config(const std::string& path) {
  return path.empty() ? MetricConfig() : io::decode_metric_config(load(path));
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct Command {
  CLI::App* app;
  std::function<int()> run;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak*-Hausdorff hyperspace toolkit", "hyperspace"};
  app.require_subcommand(1);
  std::vector<Command> commands;
  // Every output document carries the command and its arguments.
  Json manifest;
  auto echo = [&](const std::string& name, Json arguments) {
    manifest = Json{{"command", name}, {"arguments", std::move(arguments)}};
  };

  // distance
  std::string d_first, d_second, d_direction, d_config;
  bool d_approx = false;
  {
    auto* sub = app.add_subcommand("distance", "Hausdorff distance under d, or d_H^(A) with --direction");
    sub->add_option("first", d_first, "set file")->required();
    sub->add_option("second", d_second, "set file")->required();
    sub->add_option("--direction", d_direction, "test functional: e<k>, -e<k>, JSON vector or file");
    sub->add_option("--metric-config", d_config, "metric_config document (default: coordinates, unit polar)");
    sub->add_flag("--approx", d_approx, "add a decimal rendering (not authoritative)");
    commands.push_back({sub, [&] {
      echo("distance", Json{{"first", d_first}, {"second", d_second}, {"direction", d_direction},
                            {"metric_config", d_config}});
      Json report{{"kind", "distance"}};
      if (!d_direction.empty()) {
        const SparseVec A = load_vector(d_direction);
        const Extended d = pseudometric_dH(io::decode_set(load(d_first)), io::decode_set(load(d_second)), A);
        report["mode"] = "direction";
        report["direction"] = io::encode(A);
        report["distance"] = d.str();
        if (d_approx) report["approx"] = d.is_finite() ? approx_decimal(d.value()) : d.str();
      } else {
        const MetricConfig cfg = load_config(d_config);
        const Polyhedron P = closed_convex_hull(io::decode_polyhedron(load(d_first)));
        const Polyhedron Q = closed_convex_hull(io::decode_polyhedron(load(d_second)));
        const Rational d = hausdorff_full(P, Q, cfg);
        report["mode"] = "full";
        report["distance"] = io::encode(d);
        report["truncation_bound"] = io::encode(cfg.truncation_bound());
        if (d_approx) report["approx"] = approx_decimal(d);
      }
      report["manifest"] = manifest;
      emit(out, report);
      return ok;
    }});
  }

  // poulsen
  std::string p_target, p_epsilon = "1/2", p_variant = "plain", p_radius = "1", p_out;
  std::size_t p_steps = 16;
  std::uint64_t p_seed = 0;
  {
    auto* sub = app.add_subcommand("poulsen", "Densify a target polytope with certified exposed points");
    sub->add_option("--target", p_target, "target set file")->required();
    sub->add_option("--epsilon", p_epsilon, "positive rational")->capture_default_str();
    sub->add_option("--steps", p_steps, "number of steps N")->capture_default_str();
    sub->add_option("--variant", p_variant, "plain | positive | state")->capture_default_str();
    sub->add_option("--seed", p_seed, "scheduler seed")->capture_default_str();
    sub->add_option("--radius", p_radius, "polar ball radius")->capture_default_str();
    sub->add_option("--out", p_out, "output directory")->required();
    commands.push_back({sub, [&] {
      echo("poulsen", Json{{"target", p_target}, {"epsilon", p_epsilon}, {"steps", p_steps}, {"variant", p_variant},
                           {"seed", p_seed}, {"radius", p_radius}, {"out", p_out}});
      const Polyhedron U = io::decode_polyhedron(load(p_target));
      const PolarSpec polar{parse_rational(p_radius)};
      const Variant variant = parse_variant(p_variant);
      const auto built = construct(U, polar, parse_rational(p_epsilon), p_steps, variant, p_seed);
      const auto report = verify_trace(U, polar, built.result, built.trace);

      Json result = io::encode(built.result);
      result["manifest"] = manifest;
      Json trace = io::encode(built.trace);
      trace["manifest"] = manifest;
      Json verdict = io::encode(report);
      verdict["manifest"] = manifest;
      io::write_file(fs::path(p_out) / "result.json", result);
      io::write_file(fs::path(p_out) / "trace.json", trace);
      io::write_file(fs::path(p_out) / "report.json", verdict);
      emit(out, verdict);
      return report.all_passed() ? ok : verification_failed;
    }});
  }

  // verify
  std::string v_target, v_result, v_trace;
  {
    auto* sub = app.add_subcommand("verify", "Re-check a stored construction");
    sub->add_option("--target", v_target, "target set file")->required();
    sub->add_option("--result", v_result, "result set file")->required();
    sub->add_option("--trace", v_trace, "trace file")->required();
    commands.push_back({sub, [&] {
      echo("verify", Json{{"target", v_target}, {"result", v_result}, {"trace", v_trace}});
      const PoulsenTrace trace = io::decode_trace(load(v_trace));
      const auto report = verify_trace(io::decode_polyhedron(load(v_target)), PolarSpec{trace.radius},
                                       io::decode_polyhedron(load(v_result)), trace);
      Json verdict = io::encode(report);
      verdict["manifest"] = manifest;
      emit(out, verdict);
      return report.all_passed() ? ok : verification_failed;
    }});
  }

  // expose
  std::string e_set, e_vertex;
  {
    auto* sub = app.add_subcommand("expose", "Exposure certificates for the vertices of a polytope");
    sub->add_option("set", e_set, "set file")->required();
    sub->add_option("--vertex", e_vertex, "certify only this vertex (JSON vector or file)");
    commands.push_back({sub, [&] {
      echo("expose", Json{{"set", e_set}, {"vertex", e_vertex}});
      const Polyhedron P = io::decode_polyhedron(load(e_set));
      std::vector<ExposureCertificate> certs;
      if (e_vertex.empty()) {
        certs = exposed_all(P);
      } else {
        certs.push_back(exposure_certificate(P, load_vector(e_vertex)));
      }
      Json doc = io::encode_certificates(certs);
      doc["manifest"] = manifest;
      emit(out, doc);
      return ok;
    }});
  }

  // deviation
  std::string dv_set, dv_config;
  std::size_t dv_budget = 64, dv_m = 0;
  std::uint64_t dv_seed = 0;
  {
    auto* sub = app.add_subcommand("deviation", "Sandwich estimate of the extreme-deviation functional");
    sub->add_option("set", dv_set, "set file")->required();
    sub->add_option("--budget", dv_budget, "number of sampled points")->capture_default_str();
    sub->add_option("--seed", dv_seed, "sampling seed")->capture_default_str();
    sub->add_option("--metric-config", dv_config, "metric_config document");
    sub->add_option("--m", dv_m, "report whether lower >= 1/m");
    commands.push_back({sub, [&] {
      echo("deviation", Json{{"set", dv_set}, {"budget", dv_budget}, {"seed", dv_seed}, {"metric_config", dv_config},
                             {"m", dv_m}});
      const auto est = extreme_deviation(io::decode_polyhedron(load(dv_set)), load_config(dv_config), dv_budget, dv_seed);
      Json doc = io::encode(est);
      if (dv_m > 0) doc["lower_at_least_inverse_m"] = est.at_least_inverse(dv_m);
      doc["manifest"] = manifest;
      emit(out, doc);
      return ok;
    }});
  }

  // hull, vertices
  std::string h_set;
  {
    auto* sub = app.add_subcommand("hull", "Irredundant V-representation of the closed convex hull");
    sub->add_option("set", h_set, "set file")->required();
    commands.push_back({sub, [&] {
      echo("hull", Json{{"set", h_set}});
      Json doc = io::encode(closed_convex_hull(io::decode_polyhedron(load(h_set))));
      doc["manifest"] = manifest;
      emit(out, doc);
      return ok;
    }});
  }
  std::string x_set;
  {
    auto* sub = app.add_subcommand("vertices", "Extreme points of the hull");
    sub->add_option("set", x_set, "set file")->required();
    commands.push_back({sub, [&] {
      echo("vertices", Json{{"set", x_set}});
      Json doc = io::encode(HyperSet(irredundant_vertices(io::decode_polyhedron(load(x_set)))));
      doc["manifest"] = manifest;
      emit(out, doc);
      return ok;
    }});
  }

  // decompose
  std::string j_vector, j_out;
  {
    auto* sub = app.add_subcommand("decompose", "Split a dual vector into positive and negative parts");
    sub->add_option("vector", j_vector, "JSON vector or file")->required();
    sub->add_option("--out", j_out, "output directory")->required();
    commands.push_back({sub, [&] {
      echo("decompose", Json{{"vector", j_vector}, {"out", j_out}});
      const auto [plus, minus] = jordan_decompose(load_vector(j_vector));
      Json p{{"kind", "vector"}, {"vector", io::encode(plus)}, {"manifest", manifest}};
      Json m{{"kind", "vector"}, {"vector", io::encode(minus)}, {"manifest", manifest}};
      io::write_file(fs::path(j_out) / "plus.json", p);
      io::write_file(fs::path(j_out) / "minus.json", m);
      emit(out, Json{{"kind", "decomposition"}, {"plus", p["vector"]}, {"minus", m["vector"]}, {"manifest", manifest}});
      return ok;
    }});
  }

  // limits
  std::string l_manifest;
  {
    auto* sub = app.add_subcommand("limits", "Li/Ls diagnostics and monotone limits for a set sequence");
    sub->add_option("manifest", l_manifest, "limits_manifest file")->required();
    commands.push_back({sub, [&] {
      const Json doc = io::read_file(l_manifest);
      if (doc.value("kind", "") != "limits_manifest") throw ParseError("expected a 'limits_manifest' document");
      echo("limits", Json{{"manifest", l_manifest}, {"contents", doc}});
      const fs::path base = fs::path(l_manifest).parent_path();
      auto resolve = [&](const Json& entry) {
        if (!entry.is_string()) return entry;
        return io::read_file(base / entry.get<std::string>());
      };
      SequencePrefix seq;
      for (const auto& s : doc.at("sets")) seq.sets.push_back(io::decode_polyhedron(resolve(s)));
      if (doc.contains("tolerance")) seq.tolerance = io::decode_rational(doc.at("tolerance"));
      seq.stabilization_index = doc.value("stabilization_index", std::size_t{0});
      const MetricConfig cfg =
          doc.contains("metric_config") ? io::decode_metric_config(resolve(doc.at("metric_config"))) : MetricConfig();

      Json report{{"kind", "limits_report"}};
      if (doc.contains("candidates")) {
        const HyperSet cands = io::decode_set(resolve(doc.at("candidates")));
        const PointSet points = std::holds_alternative<PointSet>(cands)
                                    ? std::get<PointSet>(cands)
                                    : PointSet(std::get<Polyhedron>(cands).vertices());
        const Rational fraction = doc.contains("ls_fraction") ? io::decode_rational(doc.at("ls_fraction")) : Rational(1, 2);
        report["li_ls"] = io::encode(li_ls_diagnostic(seq, points, cfg, fraction));
      }
      if (doc.value("monotone", false)) report["monotone"] = io::encode(monotone_limit(seq, cfg));
      report["manifest"] = manifest;
      emit(out, report);
      return ok;
    }});
  }

  // immeasurable
  std::string i_first, i_second;
  {
    auto* sub = app.add_subcommand("immeasurable", "Direction with infinite d_H^(A) when recession cones differ");
    sub->add_option("first", i_first, "set file")->required();
    sub->add_option("second", i_second, "set file")->required();
    commands.push_back({sub, [&] {
      echo("immeasurable", Json{{"first", i_first}, {"second", i_second}});
      const auto w = immeasurable_witness(io::decode_polyhedron(load(i_first)), io::decode_polyhedron(load(i_second)));
      Json doc{{"kind", "immeasurable"}};
      doc["witness"] = w ? io::encode(*w) : Json();
      doc["label"] = w ? Json(label(*w)) : Json();
      doc["manifest"] = manifest;
      emit(out, doc);
      return ok;
    }});
  }

  // bounded
  std::string b_set, b_cylinder, b_clopen;
  {
    auto* sub = app.add_subcommand("bounded", "Evaluate a cylinder-boundedness or clopen predicate");
    sub->add_option("set", b_set, "set file")->required();
    auto* cyl = sub->add_option("--cylinder", b_cylinder, "cylinder document");
    auto* clo = sub->add_option("--clopen", b_clopen, "clopen document");
    cyl->excludes(clo);
    commands.push_back({sub, [&] {
      echo("bounded", Json{{"set", b_set}, {"cylinder", b_cylinder}, {"clopen", b_clopen}});
      const Polyhedron P = closed_convex_hull(io::decode_polyhedron(load(b_set)));
      bool value = true;
      if (!b_clopen.empty()) {
        value = clopen_eval(io::decode_clopen(load(b_clopen)), P);
      } else if (!b_cylinder.empty()) {
        value = cylinder_bounded(P, io::decode_cylinder(load(b_cylinder)));
      } else {
        value = P.bounded();
      }
      emit(out, Json{{"kind", "bounded"}, {"value", value}, {"manifest", manifest}});
      return ok;
    }});
  }

  // demo
  std::size_t m_M = 5, m_directions = 20;
  std::uint64_t m_seed = 0;
  {
    auto* sub = app.add_subcommand("demo", "Counterexample demo and polygon degeneracy sweep");
    sub->add_option("--M", m_M, "size of the counterexample set")->capture_default_str();
    sub->add_option("--directions", m_directions, "random directions per polygon")->capture_default_str();
    sub->add_option("--seed", m_seed, "direction seed")->capture_default_str();
    commands.push_back({sub, [&] {
      echo("demo", Json{{"M", m_M}, {"directions", m_directions}, {"seed", m_seed}});
      Json sweep = Json::array();
      std::optional<Rational> previous;
      for (unsigned k = 3; k <= 6; ++k) {
        const Rational gap = polygon_vertex_gap(inscribed_polygon(k), m_directions, m_seed);
        Json row{{"k", k}, {"vertices", 1u << k}, {"max_gap", io::encode(gap)}, {"approx", approx_decimal(gap, 8)}};
        if (previous && gap.sign() > 0) row["ratio_to_previous"] = approx_decimal(*previous / gap, 6);
        previous = gap;
        sweep.push_back(std::move(row));
      }
      emit(out, Json{{"kind", "demo"},
                     {"counterexample", io::encode(counterexample_demo(m_M))},
                     {"polygon_sweep", sweep},
                     {"manifest", manifest}});
      return ok;
    }});
  }

  std::vector<const char*> argv{"hyperspace"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : parse_failure;
  }

  try {
    for (const auto& c : commands) {
      if (c.app->parsed()) return c.run();
    }
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return parse_failure;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << '\n';
    return parse_failure;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return precondition_failed;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return parse_failure;
  }
  return parse_failure;
}

}  // namespace hyperspace::cli
