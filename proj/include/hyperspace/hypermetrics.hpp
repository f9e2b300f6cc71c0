#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hyperspace/geometry.hpp"
#include "hyperspace/rational.hpp"
#include "hyperspace/sparse_vec.hpp"

namespace hyperspace {

/// Test functionals A_n = e_{n-1}, n >= 1.
struct CoordinateFunctionals {
  friend bool operator==(const CoordinateFunctionals&, const CoordinateFunctionals&) = default;
};

/// A finite prefix A_1..A_N of a test-functional enumeration. Distances are
/// truncated after N terms; the omitted tail is below 2^(1-N).
struct ExplicitFunctionals {
  std::vector<SparseVec> functionals;
  friend bool operator==(const ExplicitFunctionals&, const ExplicitFunctionals&) = default;
};

using TestFunctionals = std::variant<CoordinateFunctionals, ExplicitFunctionals>;
using NormalizingSet = std::variant<PolarSpec, Polyhedron>;

/// Weighted-sum metric on a compact normalizing set K:
///   d(s, t) = sum_n 2^-n / (1 + max_K |<A_n, .>|) * |<A_n, s - t>|.
class MetricConfig {
 public:
  /// Coordinate functionals, normalizing set = polar ball of radius 1.
  MetricConfig();
  /// Throws UnboundedInput for an unbounded normalizing polyhedron.
  MetricConfig(TestFunctionals functionals, NormalizingSet normalizing);

  /// First `count` functionals of a fixed enumeration of all finitely
  /// supported rational vectors (a countable dense family).
  static MetricConfig dense_enumeration(std::size_t count, NormalizingSet normalizing = PolarSpec{});

  struct Term {
    std::size_t n;  // 1-based position in the enumeration
    SparseVec functional;
    Rational weight;
  };

  const TestFunctionals& functionals() const { return functionals_; }
  const NormalizingSet& normalizing_set() const { return normalizing_; }

  /// max over the normalizing set of |<A, .>|
  Rational normalizer(const SparseVec& A) const;
  Rational weight(std::size_t n, const SparseVec& A) const;
  bool contains(const SparseVec& sigma) const;

  /// Every term that can be nonzero on vectors supported in `support`.
  std::vector<Term> terms(const std::vector<SparseVec::Index>& support) const;
  /// Upper bound on the omitted tail of the series: 0 for coordinate functionals.
  Rational truncation_bound() const;

  friend bool operator==(const MetricConfig&, const MetricConfig&) = default;

 private:
  TestFunctionals functionals_;
  NormalizingSet normalizing_;
};

/// Functionals A_j spanning the cylinder; an empty list models the whole dual.
struct CylinderSpec {
  std::vector<SparseVec> generators;
  friend bool operator==(const CylinderSpec&, const CylinderSpec&) = default;
};

/// Boolean formula over "bounded in cylinder" atoms.
class ClopenExpr {
 public:
  enum class Op { atom, all_of, any_of, negation };

  static ClopenExpr bounded_in(CylinderSpec cylinder);
  static ClopenExpr all_of(std::vector<ClopenExpr> children);
  static ClopenExpr any_of(std::vector<ClopenExpr> children);
  static ClopenExpr negation(ClopenExpr child);

  friend ClopenExpr operator&&(ClopenExpr a, ClopenExpr b) { return all_of({std::move(a), std::move(b)}); }
  friend ClopenExpr operator||(ClopenExpr a, ClopenExpr b) { return any_of({std::move(a), std::move(b)}); }
  friend ClopenExpr operator!(ClopenExpr a) { return negation(std::move(a)); }

  Op op() const { return op_; }
  const CylinderSpec& cylinder() const { return cylinder_; }
  const std::vector<ClopenExpr>& children() const { return children_; }

  friend bool operator==(const ClopenExpr&, const ClopenExpr&) = default;

 private:
  Op op_ = Op::atom;
  CylinderSpec cylinder_;
  std::vector<ClopenExpr> children_;
};

/// Hausdorff distance on the real line between two scalar images.
Extended hausdorff_on_line(const ScalarSet& X, const ScalarSet& Y);

/// d_H^(A)(F, G): Hausdorff distance between the images of F and G under A.
Extended pseudometric_dH(const HyperSet& F, const HyperSet& G, const SparseVec& A);

/// Throws NotInNormalizingSet when either point lies outside the normalizing set.
Rational metric_d(const SparseVec& sigma, const SparseVec& tau, const MetricConfig& cfg);

/// min over P of d(sigma, .), solved as a weighted-l1 projection LP.
Rational distance_to_set(const SparseVec& sigma, const Polyhedron& P, const MetricConfig& cfg);

/// max over P of min over Q of d. The maximum of the convex function
/// dist(., Q) over a polytope is attained at a vertex of P.
Rational directed_hausdorff(const Polyhedron& P, const Polyhedron& Q, const MetricConfig& cfg);

/// Full Hausdorff metric under d. Throws UnboundedInput or NotInNormalizingSet.
Rational hausdorff_full(const Polyhedron& P, const Polyhedron& Q, const MetricConfig& cfg);

/// A functional A with d_H^(A)(P, Q) > 0 when the hulls differ; nothing when
/// they coincide. The first vertex of P outside co(Q) is separated, else the
/// first vertex of Q outside co(P). A coordinate functional is returned when
/// one separates that vertex; unequal recession cones fall back to
/// immeasurable_witness.
std::optional<SparseVec> separating_direction(const Polyhedron& P, const Polyhedron& Q);

/// A functional A with d_H^(A)(P, Q) = +inf when the recession cones differ;
/// coordinate directions are preferred when one works.
std::optional<SparseVec> immeasurable_witness(const Polyhedron& P, const Polyhedron& Q);

/// P lies in some multiple of the cylinder: every recession ray is annihilated
/// by every generator.
bool cylinder_bounded(const Polyhedron& P, const CylinderSpec& V);

bool clopen_eval(const ClopenExpr& expr, const Polyhedron& P);

}  // namespace hyperspace
