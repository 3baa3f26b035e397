#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace nodal {

/// Exact element of the base field Q.
///
/// Always held in lowest terms with a positive denominator, so equality is
/// structural.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(mpq_class value);

  /// Parses "p" or "p/q" with optional leading sign. Throws
  /// std::invalid_argument on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational inverse() const;

  /// "p/q" always, including q = 1. Used by the certificate format.
  std::string to_fraction_string() const;
  /// "p" for integers, "p/q" otherwise. Used for display.
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_{0};
};

}  // namespace nodal
