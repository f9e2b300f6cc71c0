#include "hyperspace/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "hyperspace/errors.hpp"

namespace hyperspace {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_text(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

std::string format_rational(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("signed denominator in '" + std::string(text) + "'");
  }
  const Integer den = parse_integer(den_text);
  if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string approx_decimal(const Rational& q, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << q.convert_to<double>();
  return out.str();
}

Rational abs(const Rational& q) { return q.sign() < 0 ? Rational(-q) : q; }

Rational pow2(int exponent) {
  Integer p = 1;
  p <<= static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

const Rational& Extended::value() const {
  if (kind_ != Kind::finite) throw std::logic_error("Extended::value on infinite value");
  return value_;
}

Extended Extended::operator-() const {
  switch (kind_) {
    case Kind::neg_inf: return pos_inf();
    case Kind::pos_inf: return neg_inf();
    case Kind::finite: break;
  }
  return Extended(Rational(-value_));
}

bool operator==(const Extended& a, const Extended& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != Extended::Kind::finite || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
  const auto rank = [](Extended::Kind k) {
    return k == Extended::Kind::neg_inf ? 0 : (k == Extended::Kind::finite ? 1 : 2);
  };
  if (a.kind_ != b.kind_) return rank(a.kind_) <=> rank(b.kind_);
  if (a.kind_ != Extended::Kind::finite) return std::strong_ordering::equal;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Extended::str() const {
  switch (kind_) {
    case Kind::neg_inf: return "-inf";
    case Kind::pos_inf: return "inf";
    case Kind::finite: break;
  }
  return format_rational(value_);
}

Extended operator+(const Extended& a, const Extended& b) {
  if (a.is_finite() && b.is_finite()) return Extended(Rational(a.value() + b.value()));
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
    throw std::logic_error("inf - inf is undefined");
  }
  return a.is_finite() ? b : a;
}

Extended abs_difference(const Extended& a, const Extended& b) {
  if (a.is_finite() && b.is_finite()) return Extended(abs(Rational(a.value() - b.value())));
  if (a.kind() == b.kind()) return Extended(0);
  return Extended::pos_inf();
}

Extended scale(const Rational& factor, const Extended& x) {
  if (factor.sign() < 0) throw std::logic_error("scale by a negative factor");
  if (factor.is_zero()) return Extended(0);
  if (!x.is_finite()) return x;
  return Extended(Rational(factor * x.value()));
}

}  // namespace hyperspace
