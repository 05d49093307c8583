#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gbswitch {

__extension__ using wide_int = __int128;

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always stored in lowest terms with a positive denominator. Arithmetic is
/// carried out in 128-bit intermediates and throws std::overflow_error if the
/// reduced result does not fit back into 64 bits.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);  // NOLINT(google-explicit-constructor)

  [[nodiscard]] std::int64_t num() const noexcept { return num_; }
  [[nodiscard]] std::int64_t den() const noexcept { return den_; }
  [[nodiscard]] double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  [[nodiscard]] bool is_integer() const noexcept { return den_ == 1; }
  [[nodiscard]] int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  /// Parses "a/b", an integer, or a plain decimal such as "2.75". Exponent
  /// notation ("1e-3") is rejected.
  static Rational parse(std::string_view text);
  [[nodiscard]] std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(wide_int num, wide_int den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational max(const Rational& a, const Rational& b);
Rational min(const Rational& a, const Rational& b);

/// A Hölder/summability exponent: an exact positive-or-zero rational, or +∞.
///
/// ∞ is a first-class value; formulas branch on is_infinite() and use exact
/// limits instead of large floats.
class Exponent {
 public:
  Exponent(Rational value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Exponent(std::int64_t value) : value_(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  static Exponent infinity() { return Exponent(); }
  /// Accepts "inf", "infinity", "∞", "a/b", integers and plain decimals.
  static Exponent parse(std::string_view text);

  [[nodiscard]] bool is_infinite() const noexcept { return !value_.has_value(); }
  [[nodiscard]] bool is_finite() const noexcept { return value_.has_value(); }
  /// Precondition: is_finite().
  [[nodiscard]] const Rational& value() const;
  [[nodiscard]] double to_double() const noexcept;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Exponent& a, const Exponent& b) = default;
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

 private:
  Exponent() = default;
  std::optional<Rational> value_;
};

}  // namespace gbswitch
