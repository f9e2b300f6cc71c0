#pragma once

#include <cstdint>
#include <vector>

#include "hyperspace/geometry.hpp"
#include "hyperspace/hypermetrics.hpp"

namespace hyperspace {

/// A functional that attains its unique maximum over a polytope at `vertex`.
/// `margin` is the minimum of <functional, vertex - w> over the other vertices w.
struct ExposureCertificate {
  SparseVec vertex;
  SparseVec functional;
  Rational margin;

  friend bool operator==(const ExposureCertificate&, const ExposureCertificate&) = default;
};

/// Solves max delta s.t. <A, v - w> >= delta for every other generator w,
/// with -1 <= A_m <= 1. A singleton yields the zero functional and margin 1.
/// Throws NotAVertex when v is not extreme, UnboundedInput on rays.
ExposureCertificate exposure_certificate(const Polyhedron& P, const SparseVec& v);

/// One certificate per irredundant vertex.
std::vector<ExposureCertificate> exposed_all(const Polyhedron& P);

/// Recomputes the margin from scratch against `vertices` and compares it.
bool check_certificate(const ExposureCertificate& cert, const std::vector<SparseVec>& vertices);

/// Sandwich estimate of sup over P of the d-distance to the nearest vertex.
struct DeviationEstimate {
  Rational lower;  // attained at `witness`
  Rational upper;  // vertex-set diameter under d
  SparseVec witness;
  std::size_t samples = 0;

  /// Membership diagnostic for the m-th deviation class: lower >= 1/m.
  bool at_least_inverse(std::size_t m) const;
};

/// Samples, in this order: the barycenter, pairwise vertex midpoints, then
/// seeded random convex combinations. The sample sequence does not depend on
/// the budget, so `lower` is nondecreasing in it.
DeviationEstimate extreme_deviation(const Polyhedron& P, const MetricConfig& cfg, std::size_t budget,
                                    std::uint64_t seed = 0);

/// Rational polygon in coordinates {0, 1} close to the convex hull of the unit
/// discs centred at (-1, 0) and (1, 0). Contains (+-1, +-1) exactly.
Polyhedron stadium_family(std::size_t n);

/// Rational 2^k-gon inscribed in the unit circle, built from rounded
/// tan-half-angle parameters so every vertex lies exactly on the circle.
Polyhedron inscribed_polygon(unsigned k);

/// max over `directions` random functionals A of d_H^(A)(P, vertex set of P).
Rational polygon_vertex_gap(const Polyhedron& P, std::size_t directions, std::uint64_t seed);

}  // namespace hyperspace
