#pragma once

// Reference computations that share no code path with the library's LP-based
// routines, plus seeded generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "hyperspace/geometry.hpp"

namespace oracle {

using hyperspace::Polyhedron;
using hyperspace::Rational;
using hyperspace::SparseVec;

/// Extreme points of a planar point set (coordinates 0 and 1) by Andrew's
/// monotone chain; collinear boundary points are dropped.
std::vector<SparseVec> planar_hull(const std::vector<SparseVec>& points);

/// Closed-form d for coordinate functionals and a polar ball of radius r:
/// sum_m 2^-(m+1) / (1 + r) |s_m - t_m|.
Rational coordinate_metric(const SparseVec& s, const SparseVec& t, const Rational& radius = 1);

/// Hausdorff distance on the line between a finite set and its hull interval:
/// half the largest gap between consecutive values.
Rational half_max_gap(std::vector<Rational> values);

/// Planar maximum of <c, x> over a polygon given by its vertices.
Rational planar_support(const std::vector<SparseVec>& vertices, const SparseVec& c);

/// Segment-to-segment Hausdorff distance on coordinate 0 under the default
/// metric: [a1, a2] vs [b1, b2] gives w_0 max(|a1 - b1|, |a2 - b2|).
Rational segment_hausdorff(Rational a1, Rational a2, Rational b1, Rational b2, const Rational& radius = 1);

}  // namespace oracle

namespace gen {

using hyperspace::Polyhedron;
using hyperspace::Rational;
using hyperspace::SparseVec;

using Rng = std::mt19937_64;

Rational rational(Rng& rng, long max_num, long max_den);
/// Entries on coordinates [0, dims) with value p / den, |p| <= max_num.
SparseVec vector(Rng& rng, std::size_t dims, long max_num, long den, bool nonnegative = false);
/// Rescaled into the l1 ball of the given radius when needed.
SparseVec in_polar(Rng& rng, std::size_t dims, const Rational& radius = 1, bool nonnegative = false);
/// Probability vector on [0, dims).
SparseVec state(Rng& rng, std::size_t dims);
/// Between 1 and max_vertices random generators inside the polar ball.
Polyhedron polytope(Rng& rng, std::size_t max_vertices, std::size_t dims, const Rational& radius = 1);

}  // namespace gen
