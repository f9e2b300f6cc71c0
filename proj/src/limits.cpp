#include "hyperspace/limits.hpp"

#include <algorithm>

#include "hyperspace/errors.hpp"

namespace hyperspace {

void SequencePrefix::validate() const {
  if (sets.empty()) throw BadParameter("sequence prefix is empty");
  if (tolerance.sign() < 0) throw BadParameter("tolerance must be nonnegative");
  if (stabilization_index >= sets.size()) throw BadParameter("stabilization index past the end of the prefix");
}

LiLsReport li_ls_diagnostic(const SequencePrefix& seq, const PointSet& candidates, const MetricConfig& cfg,
                            const Rational& ls_fraction) {
  seq.validate();
  if (ls_fraction.sign() <= 0 || ls_fraction > 1) throw BadParameter("Ls fraction must lie in (0, 1]");
  for (const auto& F : seq.sets) {
    if (!F.bounded()) throw UnboundedInput("li_ls_diagnostic");
    for (const auto& v : F.vertices()) {
      if (!cfg.contains(v)) throw NotInNormalizingSet(v.str());
    }
  }
  for (const auto& c : candidates.points()) {
    if (!cfg.contains(c)) throw NotInNormalizingSet(c.str());
  }

  LiLsReport report{ls_fraction, seq.stabilization_index, seq.sets.size(), {}};
  const auto window = static_cast<long>(report.window_end - report.window_begin);
  for (const auto& c : candidates.points()) {
    LiLsEntry entry{c, {}, false, false};
    long hits = 0;
    for (std::size_t n = 0; n < seq.sets.size(); ++n) {
      entry.distances.push_back(distance_to_set(c, seq.sets[n], cfg));
      if (n >= report.window_begin && entry.distances.back() <= seq.tolerance) ++hits;
    }
    entry.in_li = hits == window;
    entry.in_ls = Rational(hits) >= ls_fraction * window;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

MonotoneLimit monotone_limit(const SequencePrefix& seq, const MetricConfig& cfg) {
  if (seq.sets.empty()) throw BadParameter("sequence prefix is empty");
  for (std::size_t n = 0; n + 1 < seq.sets.size(); ++n) {
    for (const auto& v : seq.sets[n].vertices()) {
      if (!membership(v, seq.sets[n + 1])) {
        throw NotNested("vertex " + v.str() + " of F_" + std::to_string(n) + " is outside F_" + std::to_string(n + 1));
      }
    }
  }
  std::vector<SparseVec> vertices;
  std::vector<SparseVec> rays;
  for (const auto& F : seq.sets) {
    vertices.insert(vertices.end(), F.vertices().begin(), F.vertices().end());
    rays.insert(rays.end(), F.rays().begin(), F.rays().end());
  }
  MonotoneLimit out{closed_convex_hull(Polyhedron(std::move(vertices), std::move(rays))), {}};
  for (const auto& F : seq.sets) out.table.push_back(hausdorff_full(F, out.limit, cfg));
  return out;
}

CounterexampleReport counterexample_demo(std::size_t M) {
  if (M < 1 || M > 60) throw BadParameter("counterexample_demo needs 1 <= M <= 60");
  std::vector<SparseVec> points{SparseVec{}};
  for (std::size_t m = 1; m <= M; ++m) points.push_back(SparseVec::unit(m, pow2(static_cast<int>(m))));
  Polyhedron K(points, {}, true);
  const MetricConfig cfg(CoordinateFunctionals{}, K);
  CounterexampleReport report{M, K, {}, 0};
  for (std::size_t m = 1; m <= M; ++m) report.distances.push_back(metric_d(points[m], SparseVec{}, cfg));
  for (const auto& v : K.vertices()) report.max_norm = std::max(report.max_norm, l1_norm(v));
  return report;
}

}  // namespace hyperspace
