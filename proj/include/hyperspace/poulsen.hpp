#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyperspace/faces.hpp"
#include "hyperspace/geometry.hpp"

namespace hyperspace {

enum class Variant { plain, positive, state_space };

std::string to_string(Variant v);
/// Accepts "plain", "positive" and "state". Throws ParseError otherwise.
Variant parse_variant(const std::string& text);

/// Fair round-robin over the countable family rho_{m,k}: the k-th rational
/// convex combination of the stage-m vertices. Combinations are enumerated
/// level by level (common denominator D = 1, 2, ...), and the vertex order of
/// each stage is a seeded permutation.
class Scheduler {
 public:
  using Key = std::pair<std::size_t, std::size_t>;  // (stage m, index k >= 1)

  explicit Scheduler(std::uint64_t seed);

  /// Registers the next stage; returns its index m.
  std::size_t add_stage(const std::vector<SparseVec>& vertices);

  /// Serves the front of the queue and re-enqueues it at the back. At each
  /// round boundary one fresh rho_{m, k} per registered stage is appended.
  /// Throws BadParameter when no stage is registered.
  std::pair<Key, SparseVec> next();

  const std::deque<Key>& queue() const { return queue_; }
  /// True when the next call starts a new round.
  bool at_round_boundary() const { return round_left_ == 0; }
  std::size_t stage_count() const { return stages_.size(); }

  /// The point rho_{m,k}.
  SparseVec element(const Key& key) const;

 private:
  std::uint64_t seed_;
  std::vector<std::vector<SparseVec>> stages_;
  std::vector<std::size_t> next_k_;
  std::deque<Key> queue_;
  std::size_t round_left_ = 0;
};

/// Weights of the k-th composition (k >= 1) of the level-by-level order over
/// `parts` entries, as (numerators, common denominator).
std::pair<std::vector<std::size_t>, std::size_t> composition(std::size_t parts, std::size_t k);

struct PoulsenStep {
  std::size_t n = 0;
  SparseVec::Index fresh_coordinate = 0;
  Rational c;
  SparseVec sigma;
  SparseVec functional;  // A_n
  Rational lambda;
  Scheduler::Key drawn;  // which rho_{m,k} became varpi_n
  SparseVec varpi;
  SparseVec omega;
  ExposureCertificate certificate;
};

struct PoulsenTrace {
  Rational epsilon;
  Rational radius;
  Variant variant = Variant::plain;
  std::uint64_t seed = 0;
  std::vector<PoulsenStep> steps;
  std::vector<Scheduler::Key> schedule_state;
};

struct PoulsenResult {
  Polyhedron result;
  PoulsenTrace trace;
  /// U_0, U_1, ..., U_N (irredundant).
  std::vector<Polyhedron> stages;
};

/// lambda_n = min{1, epsilon / 2^(n+1)}
Rational poulsen_lambda(const Rational& epsilon, std::size_t n);
/// c_1 = radius; c_n = radius * min{1, lambda_1/2, ..., lambda_(n-1)/2}.
Rational poulsen_c(const Rational& epsilon, const Rational& radius, std::size_t n);

/// Builds U_N from a bounded target U in the polar ball. Each step adds
/// omega_n = (1 - lambda_n) varpi_n + lambda_n sigma_n (state space:
/// (1 - lambda_n |sigma_n|) varpi_n + lambda_n sigma_n), where sigma_n sits on
/// a fresh coordinate and A_n exposes omega_n.
/// Throws TargetOutsidePolar, VariantPreconditionViolated, UnboundedInput,
/// BadParameter.
PoulsenResult construct(const Polyhedron& U, const PolarSpec& polar, const Rational& epsilon, std::size_t steps,
                        Variant variant, std::uint64_t seed);

struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  bool all_passed() const;
  const VerificationCheck* find(const std::string& name) const;
};

/// Re-checks a construction without trusting any of its intermediate state.
VerificationReport verify_trace(const Polyhedron& U, const PolarSpec& polar, const Polyhedron& result,
                                const PoulsenTrace& trace);

/// Coordinate-wise positive and negative parts: sigma = plus - minus.
std::pair<SparseVec, SparseVec> jordan_decompose(const SparseVec& sigma);

}  // namespace hyperspace
