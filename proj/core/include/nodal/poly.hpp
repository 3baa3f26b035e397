#pragma once

#include "nodal/rational.hpp"

#include <limits>
#include <map>
#include <string>
#include <utility>

namespace nodal {

/// Degree (or operator order) of the zero element.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

/// Univariate polynomial over Q in the variable t, stored sparsely by degree.
/// Zero coefficients are never stored; the zero polynomial has no terms.
class Poly {
 public:
  using Terms = std::map<int, Rational>;

  Poly() = default;
  Poly(Rational constant);  // NOLINT(google-explicit-constructor)
  Poly(std::int64_t constant) : Poly(Rational(constant)) {}  // NOLINT
  explicit Poly(Terms terms);

  /// c * t^exponent.
  static Poly monomial(int exponent, Rational c = Rational(1));
  /// The generator t.
  static Poly t() { return monomial(1); }
  /// Dense construction, lowest degree first: {c0, c1, ...}.
  static Poly from_coefficients(std::initializer_list<std::int64_t> low_to_high);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True for zero and nonzero constants.
  bool is_constant() const { return degree() <= 0; }
  int degree() const { return terms_.empty() ? kMinusInfinity : terms_.rbegin()->first; }
  Rational coefficient(int exponent) const;
  Rational leading_coefficient() const;
  /// Scales to leading coefficient 1; zero stays zero.
  Poly monic() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Display form, highest degree first: "2 t^3 - 2 t".
  std::string to_string() const;

 private:
  Terms terms_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

Poly poly_add(const Poly& p, const Poly& q);
Poly poly_mul(const Poly& p, const Poly& q);
/// p = q*d + r with deg r < deg d. Throws std::domain_error when d is zero.
DivRem poly_divrem(const Poly& p, const Poly& d);
/// Monic gcd. Throws std::invalid_argument when both inputs are zero.
Poly poly_gcd(const Poly& p, const Poly& q);
Poly poly_derivative(const Poly& p);
/// n-th formal derivative.
Poly poly_derivative(const Poly& p, int n);
Rational poly_eval(const Poly& p, const Rational& x);
Poly poly_pow(const Poly& p, unsigned exponent);

}  // namespace nodal
