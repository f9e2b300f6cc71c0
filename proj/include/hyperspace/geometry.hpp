#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hyperspace/rational.hpp"
#include "hyperspace/sparse_vec.hpp"

namespace hyperspace {

/// Finite nonempty set of dual points, duplicates removed, first-seen order kept.
class PointSet {
 public:
  /// Throws BadParameter when `points` is empty.
  explicit PointSet(std::vector<SparseVec> points);

  const std::vector<SparseVec>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(const SparseVec& p) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<SparseVec> points_;
};

/// V-representation conv(vertices) + cone(rays). The vertex list is nonempty
/// and may contain redundant points unless `irredundant()` is set.
class Polyhedron {
 public:
  /// Throws BadParameter on an empty vertex list or a zero ray.
  Polyhedron(std::vector<SparseVec> vertices, std::vector<SparseVec> rays = {},
             bool irredundant = false);

  static Polyhedron point(SparseVec p) { return Polyhedron({std::move(p)}, {}, true); }

  const std::vector<SparseVec>& vertices() const { return vertices_; }
  const std::vector<SparseVec>& rays() const { return rays_; }
  bool bounded() const { return rays_.empty(); }
  bool irredundant() const { return irredundant_; }

  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;

 private:
  std::vector<SparseVec> vertices_;
  std::vector<SparseVec> rays_;
  bool irredundant_ = false;
};

/// A weak*-closed set as handled by the hypermetrics: either a finite point
/// set (possibly nonconvex) or a convex polyhedron.
using HyperSet = std::variant<PointSet, Polyhedron>;

/// The absolute polar of the sup-norm ball of radius 1/radius, i.e. the
/// closed l1 ball of the given radius.
struct PolarSpec {
  Rational radius{1};

  /// Throws BadParameter unless radius > 0.
  void validate() const;
  friend bool operator==(const PolarSpec&, const PolarSpec&) = default;
};

/// Image of a set under a test functional: a finite set or a closed interval
/// with possibly infinite ends.
class ScalarSet {
 public:
  static ScalarSet finite(std::vector<Rational> values);
  static ScalarSet interval(Extended lower, Extended upper);

  bool is_interval() const { return interval_; }
  const std::vector<Rational>& values() const { return values_; }
  const Extended& lower() const { return lower_; }
  const Extended& upper() const { return upper_; }

  /// Smallest interval containing the set.
  ScalarSet interval_hull() const;

  friend bool operator==(const ScalarSet&, const ScalarSet&) = default;

 private:
  bool interval_ = false;
  std::vector<Rational> values_;
  Extended lower_;
  Extended upper_;
};

/// Result of an exact membership test sigma in conv(V) + cone(R).
struct Membership {
  bool member = false;
  /// Convex weights on the vertices followed by conic weights on the rays.
  std::vector<Rational> weights;
  /// On failure: a functional A with <A, sigma> > sup_P <A, .>; derived from
  /// the Farkas certificate of the membership LP.
  SparseVec separator;
};

Membership membership_test(const SparseVec& sigma, const std::vector<SparseVec>& vertices,
                           const std::vector<SparseVec>& rays = {});
bool membership(const SparseVec& sigma, const Polyhedron& P);

/// Cone membership r in cone(generators). On failure `separator` is a
/// functional A with <A, r> > 0 and <A, g> <= 0 for every generator g.
struct ConeMembership {
  bool member = false;
  SparseVec separator;
};

ConeMembership cone_test(const SparseVec& r, const std::vector<SparseVec>& generators);
bool in_cone(const SparseVec& r, const std::vector<SparseVec>& generators);

Polyhedron closed_convex_hull(const PointSet& F);
Polyhedron closed_convex_hull(const Polyhedron& P);
Polyhedron closed_convex_hull(const HyperSet& F);

/// Extreme points of conv(vertices) + cone(rays).
PointSet irredundant_vertices(const Polyhedron& P);

/// h_P(A) = sup over P of <A, .>; +inf when a ray pairs positively with A.
Extended support_value(const Polyhedron& P, const SparseVec& A);

ScalarSet scalar_image(const PointSet& F, const SparseVec& A);
ScalarSet scalar_image(const Polyhedron& P, const SparseVec& A);
ScalarSet scalar_image(const HyperSet& F, const SparseVec& A);

/// Irredundant generators of the recession cone; empty iff P is bounded.
std::vector<SparseVec> recession_rays(const Polyhedron& P);

/// (1 - lambda) P + lambda Q for bounded P, Q. Throws UnboundedInput on rays
/// and BadParameter for lambda outside [0, 1].
Polyhedron path_combine(const Rational& lambda, const Polyhedron& P, const Polyhedron& Q);

bool polar_contains(const SparseVec& sigma, const PolarSpec& U);

/// Vertex-set equality of two hulls (both inputs reduced first).
bool same_hull(const Polyhedron& P, const Polyhedron& Q);

/// Union of the supports of all vectors, sorted.
std::vector<SparseVec::Index> joint_support(const std::vector<const std::vector<SparseVec>*>& groups);

}  // namespace hyperspace
