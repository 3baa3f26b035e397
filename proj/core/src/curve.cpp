#include "nodal/curve.hpp"

#include "nodal/errors.hpp"


namespace nodal {

namespace {

// Trial division cap for the cubic rational-root search.
constexpr unsigned long kDivisorSearchLimit = 1'000'000;

// Integer coefficients (low to high) of a positive multiple of p.
std::vector<mpz_class> integer_coefficients(const Poly& p) {
  mpz_class lcm = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> out(static_cast<std::size_t>(p.degree()) + 1, 0);
  for (const auto& [e, c] : p.terms()) {
    out[static_cast<std::size_t>(e)] = c.numerator() * (lcm / c.denominator());
  }
  return out;
}

std::optional<std::vector<mpz_class>> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small;
  std::vector<mpz_class> large;
  mpz_class root = sqrt(n);
  if (root > kDivisorSearchLimit) return std::nullopt;
  for (mpz_class k = 1; k <= root; ++k) {
    if (n % k == 0) {
      small.push_back(k);
      if (k * k != n) large.push_back(n / k);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

Irreducibility check_irreducible(const Poly& p) {
  const int deg = p.degree();
  if (deg == 1) return Irreducibility::Verified;
  if (deg < 1 || deg > 3) return Irreducibility::Unchecked;
  const auto coeffs = integer_coefficients(p);
  if (coeffs.front() == 0) return Irreducibility::Reducible;  // root t = 0
  if (deg == 2) {
    const mpz_class disc = coeffs[1] * coeffs[1] - 4 * coeffs[2] * coeffs[0];
    if (disc < 0) return Irreducibility::Verified;
    return mpz_perfect_square_p(disc.get_mpz_t()) != 0 ? Irreducibility::Reducible
                                                       : Irreducibility::Verified;
  }
  const auto numerators = positive_divisors(coeffs.front());
  const auto denominators = positive_divisors(coeffs.back());
  if (!numerators || !denominators) return Irreducibility::Unchecked;
  for (const auto& u : *numerators) {
    for (const auto& v : *denominators) {
      for (int sign : {1, -1}) {
        if (poly_eval(p, Rational(mpq_class(sign * u, v))).is_zero()) {
          return Irreducibility::Reducible;
        }
      }
    }
  }
  return Irreducibility::Verified;
}

CurveRing new_curve(std::vector<Poly> factors, CurveOptions options) {
  if (factors.size() < 2) throw CurveError("r >= 2 required: got " + std::to_string(factors.size()) + " factor(s)");
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].is_constant()) {
      throw CurveError("factor " + std::to_string(k + 1) + " is constant: " + factors[k].to_string());
    }
  }
  for (std::size_t a = 0; a < factors.size(); ++a) {
    for (std::size_t b = a + 1; b < factors.size(); ++b) {
      const Poly g = poly_gcd(factors[a], factors[b]);
      if (g != Poly(1)) {
        throw CurveError("factors not pairwise coprime: gcd(" + factors[a].to_string() + ", " +
                         factors[b].to_string() + ") = " + g.to_string());
      }
    }
  }

  CurveRing curve;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto status = check_irreducible(factors[k]);
    if (status == Irreducibility::Reducible) {
      std::string msg = "factor " + factors[k].to_string() + " is reducible over Q";
      if (options.strict_irreducible) throw CurveError(msg);
      curve.warnings_.push_back(std::move(msg));
    } else if (status == Irreducibility::Unchecked) {
      curve.warnings_.push_back("irreducibility of factor " + factors[k].to_string() +
                                " not checked");
    }
    curve.irreducibility_.push_back(status);
  }

  Poly product(1);
  for (const auto& p : factors) product = product * p;
  const Rational scale = product.leading_coefficient().inverse();
  factors.front() = scale * factors.front();
  curve.factors_ = std::move(factors);
  curve.f_ = scale * product;
  curve.f_squared_ = curve.f_ * curve.f_;
  return curve;
}

Poly CurveRing::f_power(unsigned n) const {
  switch (n) {
    case 0: return Poly(1);
    case 1: return f_;
    case 2: return f_squared_;
    default: return poly_pow(f_, n);
  }
}

bool ideal_power_member(const CurveRing& curve, const Poly& p, unsigned n) {
  if (n == 0) return true;
  return poly_divrem(p, curve.f_power(n)).remainder.is_zero();
}

std::optional<Rational> subalgebra_member(const CurveRing& curve, const Poly& p) {
  const Poly r = poly_divrem(p, curve.f()).remainder;
  if (!r.is_constant()) return std::nullopt;
  return r.coefficient(0);
}

std::optional<DaDecomposition> da_decompose(const CurveRing& curve, const WeylOp& op) {
  std::map<int, Poly> quotient;
  Rational lambda(0);
  for (const auto& [j, coeff] : op.coefficient_polys()) {
    auto [q, r] = poly_divrem(coeff, curve.f());
    if (j == 0) {
      if (!r.is_constant()) return std::nullopt;
      lambda = r.coefficient(0);
    } else if (!r.is_zero()) {
      return std::nullopt;
    }
    if (!q.is_zero()) quotient.emplace(j, std::move(q));
  }
  return DaDecomposition{lambda, WeylOp::from_coefficient_polys(quotient)};
}

WeylOp recompose(const CurveRing& curve, const DaDecomposition& dec) {
  return WeylOp(dec.lambda) + weyl_mul(from_poly(curve.f()), dec.dprime);
}

bool maps_A_into_I(const CurveRing& curve, const WeylOp& op) {
  const auto dec = da_decompose(curve, op);
  if (!dec) throw MembershipError("operator not in D_A: " + op.to_string());
  return dec->lambda.is_zero();
}

std::vector<Poly> a_spanning_set(const CurveRing& curve, unsigned max_m) {
  std::vector<Poly> out{Poly(1)};
  const auto rest = ideal_spanning_set(curve, 1, max_m);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::vector<Poly> ideal_spanning_set(const CurveRing& curve, unsigned power, unsigned max_m) {
  const Poly base = curve.f_power(power);
  std::vector<Poly> out;
  out.reserve(max_m + 1);
  for (unsigned m = 0; m <= max_m; ++m) out.push_back(Poly::monomial(static_cast<int>(m)) * base);
  return out;
}

CurveRing nodal_cubic_preset() {
  return new_curve({Poly::from_coefficients({-1, 1}), Poly::from_coefficients({1, 1})});
}

PlaneEmbedding nodal_cubic_embedding() {
  const Poly x = Poly::from_coefficients({-1, 0, 1});
  return {x, Poly::t() * x};
}

bool verify_embedding(const CurveRing& curve, const Poly& x_image, const Poly& y_image) {
  const Poly relation = y_image * y_image - x_image * x_image * (x_image + Poly(1));
  return relation.is_zero() && subalgebra_member(curve, x_image).has_value() &&
         subalgebra_member(curve, y_image).has_value();
}

}  // namespace nodal
