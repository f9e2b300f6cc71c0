#include "hyperspace/poulsen.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "hyperspace/errors.hpp"
#include "hyperspace/hypermetrics.hpp"

namespace hyperspace {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::plain: return "plain";
    case Variant::positive: return "positive";
    case Variant::state_space: break;
  }
  return "state";
}

Variant parse_variant(const std::string& text) {
  if (text == "plain") return Variant::plain;
  if (text == "positive") return Variant::positive;
  if (text == "state") return Variant::state_space;
  throw ParseError("unknown variant '" + text + "' (expected plain, positive or state)");
}

std::pair<std::vector<std::size_t>, std::size_t> composition(std::size_t parts, std::size_t k) {
  if (parts == 0 || k == 0) throw BadParameter("composition needs parts >= 1 and k >= 1");
  std::size_t level = 1;
  std::vector<std::size_t> a(parts, 0);
  a[0] = level;
  for (std::size_t step = 1; step < k; ++step) {
    // Move one unit rightwards; once everything sits in the last slot, go up a level.
    std::size_t j = parts - 1;
    while (j > 0 && a[j - 1] == 0) --j;
    if (j == 0) {
      std::fill(a.begin(), a.end(), 0);
      a[0] = ++level;
      continue;
    }
    --j;
    const std::size_t tail = a[parts - 1];
    a[parts - 1] = 0;
    --a[j];
    a[j + 1] = tail + 1;
  }
  return {a, level};
}

Scheduler::Scheduler(std::uint64_t seed) : seed_(seed) {}

std::size_t Scheduler::add_stage(const std::vector<SparseVec>& vertices) {
  if (vertices.empty()) throw BadParameter("scheduler stage needs at least one vertex");
  std::vector<SparseVec> order = vertices;
  std::mt19937_64 rng(seed_ + stages_.size());
  std::shuffle(order.begin(), order.end(), rng);
  stages_.push_back(std::move(order));
  next_k_.push_back(1);
  return stages_.size() - 1;
}

SparseVec Scheduler::element(const Key& key) const {
  const auto& verts = stages_.at(key.first);
  const auto [weights, level] = composition(verts.size(), key.second);
  SparseVec out;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (weights[i] != 0) {
      out += Rational(static_cast<long>(weights[i]), static_cast<long>(level)) * verts[i];
    }
  }
  return out;
}

std::pair<Scheduler::Key, SparseVec> Scheduler::next() {
  if (stages_.empty()) throw BadParameter("scheduler has no stages");
  if (round_left_ == 0) {
    for (std::size_t m = 0; m < stages_.size(); ++m) queue_.emplace_back(m, next_k_[m]++);
    round_left_ = queue_.size();
  }
  Key key = queue_.front();
  queue_.pop_front();
  queue_.push_back(key);
  --round_left_;
  return {key, element(key)};
}

Rational poulsen_lambda(const Rational& epsilon, std::size_t n) {
  return std::min(Rational(1), epsilon * pow2(-static_cast<int>(n) - 1));
}

Rational poulsen_c(const Rational& epsilon, const Rational& radius, std::size_t n) {
  Rational bound = 1;
  for (std::size_t j = 1; j < n; ++j) bound = std::min(bound, poulsen_lambda(epsilon, j) / 2);
  return radius * bound;
}

std::pair<SparseVec, SparseVec> jordan_decompose(const SparseVec& sigma) {
  std::vector<SparseVec::Entry> plus;
  std::vector<SparseVec::Entry> minus;
  for (const auto& [k, x] : sigma.entries()) {
    if (x.sign() > 0) {
      plus.emplace_back(k, x);
    } else {
      minus.emplace_back(k, -x);
    }
  }
  return {SparseVec(std::move(plus)), SparseVec(std::move(minus))};
}

namespace {

bool nonnegative(const SparseVec& v) {
  return std::all_of(v.entries().begin(), v.entries().end(), [](const auto& e) { return e.second.sign() > 0; });
}

void check_target(const Polyhedron& U0, const PolarSpec& polar, Variant variant) {
  for (const auto& v : U0.vertices()) {
    if (!polar_contains(v, polar)) throw TargetOutsidePolar(v.str());
    if (variant == Variant::plain) continue;
    if (!nonnegative(v)) throw VariantPreconditionViolated("vertex with a negative coordinate: " + v.str());
    if (variant == Variant::state_space && coordinate_sum(v) != 1) {
      throw VariantPreconditionViolated("vertex whose coordinates do not sum to 1: " + v.str());
    }
  }
}

Rational margin_of(const SparseVec& A, const SparseVec& v, const std::vector<SparseVec>& vertices) {
  std::optional<Rational> margin;
  const Rational top = pair(A, v);
  for (const auto& w : vertices) {
    if (w == v) continue;
    Rational gap = top - pair(A, w);
    if (!margin || gap < *margin) margin = std::move(gap);
  }
  return margin.value_or(Rational(1));
}

}  // namespace

PoulsenResult construct(const Polyhedron& U, const PolarSpec& polar, const Rational& epsilon, std::size_t steps,
                        Variant variant, std::uint64_t seed) {
  polar.validate();
  if (epsilon.sign() <= 0) throw BadParameter("epsilon must be positive");
  if (!U.bounded()) throw UnboundedInput("construct");
  Polyhedron current = closed_convex_hull(U);
  check_target(current, polar, variant);

  SparseVec::Index fresh = 0;
  for (const auto& v : current.vertices()) {
    if (auto top = max_index(v)) fresh = std::max(fresh, *top + 1);
  }

  PoulsenTrace trace{epsilon, polar.radius, variant, seed, {}, {}};
  std::vector<Polyhedron> stages{current};
  Scheduler scheduler(seed);
  scheduler.add_stage(current.vertices());

  for (std::size_t n = 1; n <= steps; ++n, ++fresh) {
    PoulsenStep step;
    step.n = n;
    step.fresh_coordinate = fresh;
    step.lambda = poulsen_lambda(epsilon, n);
    step.c = poulsen_c(epsilon, polar.radius, n);
    step.sigma = SparseVec::unit(fresh, step.c);
    if (variant != Variant::plain) step.sigma = jordan_decompose(step.sigma).first;
    step.functional = SparseVec::unit(fresh, 1 / step.c);
    std::tie(step.drawn, step.varpi) = scheduler.next();

    Rational keep = 1 - step.lambda;
    if (variant == Variant::state_space) {
      keep = 1 - step.lambda * l1_norm(step.sigma);
      if (keep.sign() < 0) throw VariantPreconditionViolated("lambda_n * |sigma_n| exceeds 1");
    }
    step.omega = keep * step.varpi + step.lambda * step.sigma;

    std::vector<SparseVec> verts = current.vertices();
    verts.push_back(step.omega);
    current = closed_convex_hull(Polyhedron(std::move(verts)));
    stages.push_back(current);
    scheduler.add_stage(current.vertices());
    trace.steps.push_back(std::move(step));
  }

  for (auto& step : trace.steps) {
    step.certificate = {step.omega, step.functional, margin_of(step.functional, step.omega, current.vertices())};
  }
  trace.schedule_state.assign(scheduler.queue().begin(), scheduler.queue().end());
  return {current, std::move(trace), std::move(stages)};
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const VerificationCheck* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport verify_trace(const Polyhedron& U, const PolarSpec& polar, const Polyhedron& result,
                                const PoulsenTrace& trace) {
  VerificationReport report;
  auto add = [&](std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };
  const Rational& eps = trace.epsilon;
  const auto& final_vertices = result.vertices();

  // (a) distance ledger
  try {
    const Rational h = hausdorff_full(closed_convex_hull(U), result, MetricConfig(CoordinateFunctionals{}, polar));
    add("hausdorff_le_2eps", h <= 2 * eps, "d_H = " + format_rational(h) + ", 2eps = " + format_rational(2 * eps));
    add("hausdorff_le_eps", h <= eps, "d_H = " + format_rational(h) + ", eps = " + format_rational(eps));
  } catch (const PreconditionError& e) {
    add("hausdorff_le_2eps", false, e.what());
    add("hausdorff_le_eps", false, e.what());
  }

  // (b) designated vertices are exposed in the final set
  {
    bool ok = result.bounded();
    std::ostringstream detail;
    for (const auto& s : trace.steps) {
      try {
        const auto fresh = exposure_certificate(result, s.omega);
        if (!check_certificate(s.certificate, final_vertices)) {
          ok = false;
          detail << "n=" << s.n << ": stored certificate does not re-check; ";
        }
        detail << "n=" << s.n << " margin " << format_rational(fresh.margin) << "; ";
      } catch (const PreconditionError& e) {
        ok = false;
        detail << "n=" << s.n << ": " << e.what() << "; ";
      }
    }
    add("exposure", ok, detail.str());
  }
  {
    bool ok = true;
    std::ostringstream detail;
    for (std::size_t j = 0; j < trace.steps.size(); ++j) {
      const auto& sj = trace.steps[j];
      if (pair(sj.functional, sj.omega) != sj.lambda) {
        ok = false;
        detail << "A_" << sj.n << "(omega_" << sj.n << ") != lambda; ";
      }
      for (std::size_t n = j + 1; n < trace.steps.size(); ++n) {
        if (!(pair(sj.functional, trace.steps[n].omega) < sj.lambda)) {
          ok = false;
          detail << "A_" << sj.n << "(omega_" << trace.steps[n].n << ") >= lambda_" << sj.n << "; ";
        }
      }
    }
    add("cross_pairs", ok, ok ? "all strict" : detail.str());
  }

  // (c) lambda / c schedules and the fresh-coordinate normalizations
  {
    bool ok = true;
    std::ostringstream detail;
    SparseVec::Index floor = 0;
    for (const auto& v : U.vertices()) {
      if (auto top = max_index(v)) floor = std::max(floor, *top + 1);
    }
    Rational bound = trace.radius;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const auto& s = trace.steps[i];
      const std::size_t n = i + 1;
      const Rational lambda = poulsen_lambda(eps, n);
      if (s.n != n || s.lambda != lambda) {
        ok = false;
        detail << "lambda_" << n << " = " << format_rational(s.lambda) << " expected " << format_rational(lambda) << "; ";
      }
      if (s.c.sign() <= 0 || s.c > bound) {
        ok = false;
        detail << "c_" << n << " = " << format_rational(s.c) << " exceeds " << format_rational(bound) << "; ";
      }
      if (s.fresh_coordinate < floor) {
        ok = false;
        detail << "k_" << n << " is not fresh; ";
      }
      floor = s.fresh_coordinate + 1;
      if (s.sigma != SparseVec::unit(s.fresh_coordinate, s.c) || pair(s.functional, s.sigma) != 1 ||
          s.functional.support() != std::vector<SparseVec::Index>{s.fresh_coordinate}) {
        ok = false;
        detail << "sigma_" << n << " / A_" << n << " normalization; ";
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (!pair(trace.steps[j].functional, s.sigma).is_zero()) {
          ok = false;
          detail << "A_" << j + 1 << "(sigma_" << n << ") != 0; ";
        }
      }
      bound = std::min(bound, trace.radius * lambda / 2);
    }
    add("schedule", ok, ok ? "lambda and c match" : detail.str());
  }

  // (d) everything stays in the polar ball
  {
    bool ok = true;
    std::string detail = "all inside";
    auto visit = [&](const SparseVec& v) {
      if (!polar_contains(v, polar)) {
        ok = false;
        detail = "outside: " + v.str();
      }
    };
    for (const auto& v : final_vertices) visit(v);
    for (const auto& s : trace.steps) visit(s.omega);
    add("polar", ok, detail);
  }

  // (e) positivity and normalization
  {
    bool ok = true;
    std::string detail = "not required";
    if (trace.variant != Variant::plain) {
      detail = "all vertices satisfy the variant constraints";
      for (const auto& v : final_vertices) {
        const bool sum_ok = trace.variant != Variant::state_space || coordinate_sum(v) == 1;
        if (!nonnegative(v) || !sum_ok) {
          ok = false;
          detail = "violating vertex: " + v.str();
        }
      }
    }
    add("variant", ok, detail);
  }
  return report;
}

}  // namespace hyperspace
