#pragma once

#include <vector>

#include "hyperspace/geometry.hpp"
#include "hyperspace/hypermetrics.hpp"

namespace hyperspace {

/// A finite prefix F_0, ..., F_(N-1) of a set sequence (0-based indices).
struct SequencePrefix {
  std::vector<Polyhedron> sets;
  /// Distance tolerance; 0 asks for exact attainment.
  Rational tolerance{0};
  std::size_t stabilization_index = 0;

  /// Throws BadParameter on an empty list, a negative tolerance or a
  /// stabilization index past the end.
  void validate() const;
};

struct LiLsEntry {
  SparseVec candidate;
  /// dist_d(candidate, F_n) for every n in the prefix.
  std::vector<Rational> distances;
  bool in_li = false;
  bool in_ls = false;
};

/// Finite-prefix proxies for the lower and upper limits:
///   in_li: distance <= tolerance at every n >= stabilization_index;
///   in_ls: distance <= tolerance at no fewer than `ls_fraction` of those n.
/// Both rules read the same tail window, so in_li implies in_ls.
struct LiLsReport {
  Rational ls_fraction;
  std::size_t window_begin = 0;
  std::size_t window_end = 0;
  std::vector<LiLsEntry> entries;
};

/// Throws NotInNormalizingSet, UnboundedInput, BadParameter.
LiLsReport li_ls_diagnostic(const SequencePrefix& seq, const PointSet& candidates, const MetricConfig& cfg,
                            const Rational& ls_fraction = Rational(1, 2));

struct MonotoneLimit {
  Polyhedron limit;
  /// d_H(F_n, limit) for every n.
  std::vector<Rational> table;
};

/// Limit of an increasing sequence of polytopes. Throws NotNested when some
/// vertex of F_n is outside F_(n+1).
MonotoneLimit monotone_limit(const SequencePrefix& seq, const MetricConfig& cfg);

/// The set K_M = {2^m e_m : 1 <= m <= M} u {0}: weak* null but with
/// unbounded convex hulls in norm.
struct CounterexampleReport {
  std::size_t M = 0;
  Polyhedron K;
  /// d(2^m e_m, 0) for m = 1..M, normalized over K_M itself.
  std::vector<Rational> distances;
  /// max of the l1 norm over co(K_M).
  Rational max_norm;
};

CounterexampleReport counterexample_demo(std::size_t M);

}  // namespace hyperspace
