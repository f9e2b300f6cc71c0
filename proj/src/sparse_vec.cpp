#include "hyperspace/sparse_vec.hpp"

#include <algorithm>
#include <sstream>

namespace hyperspace {

SparseVec::SparseVec(std::initializer_list<Entry> entries) : entries_(entries) { canonicalize(); }

SparseVec::SparseVec(std::vector<Entry> entries) : entries_(std::move(entries)) { canonicalize(); }

void SparseVec::canonicalize() {
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (auto& e : entries_) {
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(std::move(e));
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.second.is_zero(); });
  entries_ = std::move(merged);
}

SparseVec SparseVec::unit(Index k, const Rational& value) {
  SparseVec v;
  if (!value.is_zero()) v.entries_.emplace_back(k, value);
  return v;
}

SparseVec SparseVec::dense(const std::vector<Rational>& values) {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < values.size(); ++i) entries.emplace_back(i, values[i]);
  return SparseVec(std::move(entries));
}

Rational SparseVec::operator[](Index k) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                             [](const Entry& e, Index idx) { return e.first < idx; });
  return (it != entries_.end() && it->first == k) ? it->second : Rational(0);
}

std::vector<SparseVec::Index> SparseVec::support() const {
  std::vector<Index> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

namespace {

// Merge two sorted entry lists with a sign on the second operand.
std::vector<SparseVec::Entry> merge(const std::vector<SparseVec::Entry>& a,
                                    const std::vector<SparseVec::Entry>& b, bool subtract) {
  std::vector<SparseVec::Entry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational v = subtract ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseVec& SparseVec::operator+=(const SparseVec& other) {
  entries_ = merge(entries_, other.entries_, false);
  return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& other) {
  entries_ = merge(entries_, other.entries_, true);
  return *this;
}

SparseVec& SparseVec::operator*=(const Rational& factor) {
  if (factor.is_zero()) {
    entries_.clear();
  } else {
    for (auto& e : entries_) e.second *= factor;
  }
  return *this;
}

SparseVec SparseVec::operator-() const {
  SparseVec out = *this;
  for (auto& e : out.entries_) e.second = -e.second;
  return out;
}

bool operator<(const SparseVec& a, const SparseVec& b) {
  return std::lexicographical_compare(
      a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
      [](const SparseVec::Entry& x, const SparseVec::Entry& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

std::string SparseVec::str() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ", ";
    out << entries_[i].first << ": " << format_rational(entries_[i].second);
  }
  out << '}';
  return out.str();
}

Rational pair(const SparseVec& functional, const SparseVec& point) {
  const auto& a = functional.entries();
  const auto& b = point.entries();
  Rational sum = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      ++i;
    } else if (b[j].first < a[i].first) {
      ++j;
    } else {
      sum += a[i].second * b[j].second;
      ++i;
      ++j;
    }
  }
  return sum;
}

Rational l1_norm(const SparseVec& point) {
  Rational sum = 0;
  for (const auto& e : point.entries()) sum += abs(e.second);
  return sum;
}

Rational sup_norm(const SparseVec& functional) {
  Rational best = 0;
  for (const auto& e : functional.entries()) best = std::max(best, abs(e.second));
  return best;
}

Rational coordinate_sum(const SparseVec& v) {
  Rational sum = 0;
  for (const auto& e : v.entries()) sum += e.second;
  return sum;
}

std::optional<SparseVec::Index> max_index(const SparseVec& v) {
  if (v.empty()) return std::nullopt;
  return v.entries().back().first;
}

}  // namespace hyperspace
