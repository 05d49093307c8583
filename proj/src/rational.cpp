#include "gbswitch/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "gbswitch/error.hpp"

namespace gbswitch {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NonUnimodularEntry: return "NonUnimodularEntry";
    case ErrorKind::SizeOverflow: return "SizeOverflow";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::AxisOutOfRange: return "AxisOutOfRange";
    case ErrorKind::InvalidExponent: return "InvalidExponent";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

wide_int gcd128(wide_int a, wide_int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const wide_int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(wide_int v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(wide_int num, wide_int den) {
  if (den == 0) throw std::domain_error("Rational: division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const wide_int g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits64(num) || !fits64(den)) throw std::overflow_error("Rational: 64-bit overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<wide_int>(a.num_) * b.den_ +
                                 static_cast<wide_int>(b.num_) * a.den_,
                             static_cast<wide_int>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator-(const Rational& a) {
  return Rational::from_wide(-static_cast<wide_int>(a.num_), a.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<wide_int>(a.num_) * b.num_,
                             static_cast<wide_int>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
  return Rational::from_wide(static_cast<wide_int>(a.num_) * b.den_,
                             static_cast<wide_int>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const wide_int lhs = static_cast<wide_int>(a.num_) * b.den_;
  const wide_int rhs = static_cast<wide_int>(b.num_) * a.den_;
  return lhs <=> rhs;
}

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty number");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_int(text.substr(0, slash));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    return {num, den};
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if ((whole.empty() && frac.empty()) || frac.size() > 18 ||
        frac.find_first_not_of("0123456789") != std::string_view::npos ||
        whole.find_first_not_of("0123456789") != std::string_view::npos) {
      throw Error(ErrorKind::ParseError, "not a decimal: '" + std::string(text) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const Rational w(whole.empty() ? 0 : parse_int(whole));
    const Rational f(frac.empty() ? 0 : parse_int(frac), scale);
    const Rational value = w + f;
    return negative ? -value : value;
  }
  return {parse_int(text)};
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Exponent Exponent::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf" || text == "∞") {
    return infinity();
  }
  return {Rational::parse(text)};
}

const Rational& Exponent::value() const {
  if (!value_) throw std::logic_error("Exponent::value() on infinity");
  return *value_;
}

double Exponent::to_double() const noexcept {
  return value_ ? value_->to_double() : std::numeric_limits<double>::infinity();
}

std::string Exponent::str() const { return value_ ? value_->str() : "inf"; }

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  return *a.value_ <=> *b.value_;
}

}  // namespace gbswitch
