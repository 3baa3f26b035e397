#pragma once

#include "nodal/poly.hpp"
#include "nodal/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nodal {

/// Exponent pair (i, j) of the normal-form monomial t^i d^j.
struct Monomial {
  int t = 0;
  int d = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Element of the first Weyl algebra Q<t, d>/(dt - td - 1), held in the
/// normal form sum c_ij t^i d^j with every t to the left of every d.
/// No zero coefficient is stored, so two operators are equal iff their
/// term maps are equal.
class WeylOp {
 public:
  using Terms = std::map<Monomial, Rational>;

  WeylOp() = default;
  WeylOp(Rational scalar);  // NOLINT(google-explicit-constructor)
  WeylOp(std::int64_t scalar) : WeylOp(Rational(scalar)) {}  // NOLINT
  explicit WeylOp(Terms terms);

  static WeylOp t() { return term(1, 0); }
  static WeylOp d() { return term(0, 1); }
  static WeylOp term(int t_exp, int d_exp, Rational c = Rational(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int t_exp, int d_exp) const;

  /// Groups the normal form as sum_j p_j(t) d^j; only nonzero p_j appear.
  std::map<int, Poly> coefficient_polys() const;
  /// Inverse of coefficient_polys.
  static WeylOp from_coefficient_polys(const std::map<int, Poly>& by_order);

  WeylOp& operator+=(const WeylOp& rhs);
  WeylOp& operator-=(const WeylOp& rhs);

  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
  friend WeylOp operator*(const Rational& c, const WeylOp& op);
  WeylOp operator-() const;

  friend bool operator==(const WeylOp& a, const WeylOp& b) = default;

  /// Terms ordered by d-exponent descending, then t-exponent descending:
  /// "t^2 d^2 + 4 t d + 2".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Normal form of D1 * D2, via the commutation identity
///   d^j t^i = sum_s C(j,s) i(i-1)...(i-s+1) t^(i-s) d^(j-s).
WeylOp weyl_mul(const WeylOp& lhs, const WeylOp& rhs);

/// Action on Q[t]: sum c_ij t^i (d/dt)^j p.
Poly weyl_apply(const WeylOp& op, const Poly& p);

/// D1 D2 - D2 D1.
WeylOp weyl_commutator(const WeylOp& lhs, const WeylOp& rhs);

/// Highest d-exponent, or kMinusInfinity for the zero operator.
int op_order(const WeylOp& op);

/// The order-zero operator "multiply by p".
WeylOp from_poly(const Poly& p);

/// Inverse of from_poly on order <= 0 operators; throws std::invalid_argument
/// if any d appears.
Poly to_poly(const WeylOp& op);

}  // namespace nodal
