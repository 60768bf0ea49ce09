#include "troplab/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace troplab {

namespace {

[[noreturn]] void parse_error(std::string_view text, std::size_t pos, const char* what) {
  throw std::invalid_argument("malformed rational \"" + std::string(text) + "\" at position " +
                              std::to_string(pos) + ": " + what);
}

// Parses an optionally signed run of digits starting at pos; advances pos.
BigInt parse_digits(std::string_view text, std::size_t& pos, bool allow_sign) {
  bool negative = false;
  if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t start = pos;
  BigInt v = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    v = v * 10 + (text[pos] - '0');
    ++pos;
  }
  if (pos == start) parse_error(text, pos, "expected digit");
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = Rep(num, den);
}

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  std::size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::string_view body = text.substr(0, end);
  if (pos == end) parse_error(text, pos, "empty input");

  const bool negative = body[pos] == '-';
  BigInt whole = parse_digits(body, pos, true);
  if (pos == body.size()) return Rational(whole);

  if (body[pos] == '/') {
    ++pos;
    BigInt den = parse_digits(body, pos, false);
    if (pos != body.size()) parse_error(text, pos, "trailing characters");
    if (den == 0) parse_error(text, pos, "zero denominator");
    return Rational(whole, den);
  }
  if (body[pos] == '.') {
    ++pos;
    const std::size_t frac_start = pos;
    BigInt frac = parse_digits(body, pos, false);
    if (pos != body.size()) parse_error(text, pos, "trailing characters");
    BigInt scale = 1;
    for (std::size_t i = frac_start; i < pos; ++i) scale *= 10;
    BigInt num = (whole < 0 ? BigInt(-whole) : whole) * scale + frac;
    if (negative) num = -num;
    return Rational(num, scale);
  }
  parse_error(text, pos, "unexpected character");
}

std::string Rational::str() const {
  if (is_integer()) return boost::multiprecision::numerator(value_).str();
  return boost::multiprecision::numerator(value_).str() + "/" +
         boost::multiprecision::denominator(value_).str();
}

BigInt Rational::num() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::den() const { return boost::multiprecision::denominator(value_); }

bool Rational::is_integer() const { return boost::multiprecision::denominator(value_) == 1; }

BigInt Rational::floor() const {
  const BigInt n = num();
  const BigInt d = den();
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::abs() const { return value_ < 0 ? -*this : *this; }

int Rational::sign() const { return value_ < 0 ? -1 : (value_ > 0 ? 1 : 0); }

std::optional<std::int64_t> Rational::to_int64() const {
  if (!is_integer()) return std::nullopt;
  const BigInt n = num();
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return static_cast<std::int64_t>(n);
}

double Rational::to_double() const { return value_.convert_to<double>(); }

Rational Rational::operator-() const { return Rational(Rep(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace troplab
