#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperspace/rational.hpp"

namespace hyperspace {

/// Finitely supported vector over natural-number coordinates.
///
/// The same type plays two roles: a primal test functional A (a finitely
/// supported sequence, measured in sup norm) and a dual point sigma (an
/// element of l1, measured in l1 norm). Entries are kept sorted by index and
/// no zero is ever stored, so equality is entrywise equality.
class SparseVec {
 public:
  using Index = std::uint64_t;
  using Entry = std::pair<Index, Rational>;

  SparseVec() = default;
  /// Duplicate indices are summed; zeros are dropped.
  SparseVec(std::initializer_list<Entry> entries);
  explicit SparseVec(std::vector<Entry> entries);

  /// value * e_k
  static SparseVec unit(Index k, const Rational& value = Rational(1));
  /// Dense vector on coordinates 0..n-1.
  static SparseVec dense(const std::vector<Rational>& values);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  Rational operator[](Index k) const;
  std::vector<Index> support() const;

  SparseVec& operator+=(const SparseVec& other);
  SparseVec& operator-=(const SparseVec& other);
  SparseVec& operator*=(const Rational& factor);

  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend SparseVec operator*(const Rational& f, SparseVec a) { return a *= f; }
  SparseVec operator-() const;

  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.entries_ == b.entries_; }
  /// Lexicographic order on (index, value) entries; used for canonical sorting.
  friend bool operator<(const SparseVec& a, const SparseVec& b);

  /// Short human form, e.g. "{0: 1/2, 3: -1/1}".
  std::string str() const;

 private:
  void canonicalize();
  std::vector<Entry> entries_;
};

/// Dual pairing <A, sigma> = sum_k A_k sigma_k.
Rational pair(const SparseVec& functional, const SparseVec& point);
/// sum_k |sigma_k|
Rational l1_norm(const SparseVec& point);
/// max_k |A_k|, 0 for the empty vector.
Rational sup_norm(const SparseVec& functional);
/// sum_k sigma_k
Rational coordinate_sum(const SparseVec& v);
/// Largest index in the support, or nothing for the zero vector.
std::optional<SparseVec::Index> max_index(const SparseVec& v);

}  // namespace hyperspace
