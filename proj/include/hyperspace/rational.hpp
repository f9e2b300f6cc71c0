#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace hyperspace {

/// Exact rational scalar, always in lowest terms with a positive denominator.
/// Expression templates are disabled so `auto` never captures a proxy.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Canonical "num/den" text, e.g. "-3/4", "5/1", "0/1".
std::string format_rational(const Rational& q);

/// Accepts "num/den" or a bare integer; the result is canonicalized.
/// Throws ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Decimal rendering for human-readable output only.
std::string approx_decimal(const Rational& q, int digits = 12);

Rational abs(const Rational& q);
Rational pow2(int exponent);
inline bool is_zero(const Rational& q) { return q.is_zero(); }
inline int sign(const Rational& q) { return q.sign(); }

/// Rational extended by -inf and +inf. Used for support values, interval
/// endpoints and distances whose codomain includes infinity.
class Extended {
 public:
  enum class Kind { neg_inf, finite, pos_inf };

  Extended() = default;
  Extended(Rational value) : kind_(Kind::finite), value_(std::move(value)) {}  // NOLINT
  Extended(int value) : kind_(Kind::finite), value_(value) {}                  // NOLINT

  static Extended pos_inf() { return Extended(Kind::pos_inf); }
  static Extended neg_inf() { return Extended(Kind::neg_inf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  bool is_neg_inf() const { return kind_ == Kind::neg_inf; }

  /// Throws std::logic_error when infinite.
  const Rational& value() const;

  Extended operator-() const;
  friend bool operator==(const Extended& a, const Extended& b);
  friend std::strong_ordering operator<=>(const Extended& a, const Extended& b);

  /// "inf", "-inf" or the canonical rational text.
  std::string str() const;

 private:
  explicit Extended(Kind kind) : kind_(kind) {}
  Kind kind_ = Kind::finite;
  Rational value_{0};
};

/// Sum where +inf absorbs; adding +inf and -inf throws std::logic_error.
Extended operator+(const Extended& a, const Extended& b);
/// |a - b| with the convention that any infinite operand yields +inf unless
/// both are the same infinity (distance 0).
Extended abs_difference(const Extended& a, const Extended& b);
/// Product by a nonnegative finite scalar; 0 * inf is 0.
Extended scale(const Rational& factor, const Extended& x);

}  // namespace hyperspace
