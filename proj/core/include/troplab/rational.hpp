#pragma once

// Exact rational scalar used for every real-valued quantity in troplab.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace troplab {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Values are immutable in the sense that every operation
/// returns a new Rational.
class Rational {
 public:
  Rational() = default;
  Rational(long long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& v) : value_(v) {}
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "p", "p/q", and decimal "[-]d.ddd". Throws std::invalid_argument
  /// with the offending position on malformed input or a zero denominator.
  static Rational parse(std::string_view text);

  /// "p" for integers, otherwise "p/q" in lowest terms.
  std::string str() const;

  BigInt num() const;
  BigInt den() const;

  bool is_integer() const;
  BigInt floor() const;
  /// x - floor(x), always in [0, 1).
  Rational frac() const;
  Rational abs() const;
  int sign() const;

  /// The value as int64 when it is an integer that fits.
  std::optional<std::int64_t> to_int64() const;
  /// Lossy, for rendering only (SVG coordinates).
  double to_double() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  using Rep = boost::multiprecision::cpp_rational;
  explicit Rational(Rep v) : value_(std::move(v)) {}

  Rep value_{0};
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace troplab
