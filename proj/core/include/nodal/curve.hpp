#pragma once

#include "nodal/poly.hpp"
#include "nodal/rational.hpp"
#include "nodal/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nodal {

enum class Irreducibility {
  Verified,   // degree <= 3 without a rational root, or linear
  Reducible,  // degree 2 or 3 with a rational root
  Unchecked,  // degree >= 4, or the rational-root search was too large
};

struct CurveOptions {
  /// Reject factors shown reducible by the bounded check.
  bool strict_irreducible = false;
};

/// The curve datum f = f_1 ... f_r with pairwise coprime nonconstant f_i,
/// I = f Q[t] and A = Q + I. f is monic; the scaling needed for that is
/// absorbed into the first factor, so f is always the product of factors().
class CurveRing {
 public:
  const std::vector<Poly>& factors() const { return factors_; }
  const Poly& f() const { return f_; }
  std::size_t r() const { return factors_.size(); }
  const std::vector<Irreducibility>& irreducibility() const { return irreducibility_; }
  /// Human-readable notes about factors accepted without full verification.
  const std::vector<std::string>& warnings() const { return warnings_; }
  /// f^n, cached for small n.
  Poly f_power(unsigned n) const;

  friend CurveRing new_curve(std::vector<Poly> factors, CurveOptions options);

 private:
  CurveRing() = default;
  std::vector<Poly> factors_;
  Poly f_;
  Poly f_squared_;
  std::vector<Irreducibility> irreducibility_;
  std::vector<std::string> warnings_;
};

/// Validates and builds a curve. Throws CurveError when r < 2, a factor is
/// constant, two factors share a root, or (strict mode) a factor is reducible.
CurveRing new_curve(std::vector<Poly> factors, CurveOptions options = {});

/// Rational-root test for degree 2 and 3; Verified for linear input.
Irreducibility check_irreducible(const Poly& p);

/// True iff f^n divides p. Always true for n = 0.
bool ideal_power_member(const CurveRing& curve, const Poly& p, unsigned n);

/// The constant lambda with p - lambda in I when p lies in A = Q + I.
std::optional<Rational> subalgebra_member(const CurveRing& curve, const Poly& p);

/// D = lambda + f D'.
struct DaDecomposition {
  Rational lambda;
  WeylOp dprime;
};

/// Decides D in D_A = Q + I D_B. Writing D = sum_j p_j(t) d^j, membership
/// holds iff f | p_j for all j >= 1 and p_0 mod f is a constant lambda.
std::optional<DaDecomposition> da_decompose(const CurveRing& curve, const WeylOp& op);

/// lambda + f D' as an operator.
WeylOp recompose(const CurveRing& curve, const DaDecomposition& dec);

/// Decides D(A) in I for D in D_A.
///
/// From D = lambda + f D' we get D(a) = lambda a + f D'(a). The second
/// summand is in I for every a, and lambda a lies in I for all a in A iff
/// lambda = 0 (take a = 1). So the answer is exactly lambda == 0.
/// Throws MembershipError if D is not in D_A.
bool maps_A_into_I(const CurveRing& curve, const WeylOp& op);

/// [1, f, f t, ..., f t^max_m]: spans A up to t-degree deg f + max_m.
std::vector<Poly> a_spanning_set(const CurveRing& curve, unsigned max_m);

/// [f^power t^0, ..., f^power t^max_m]: spans I^power up to a degree bound.
std::vector<Poly> ideal_spanning_set(const CurveRing& curve, unsigned power, unsigned max_m);

/// The plane curve y^2 = x^2 (x + 1) parametrized by t.
struct PlaneEmbedding {
  Poly x_image;
  Poly y_image;
};

/// Factors [t - 1, t + 1], so f = t^2 - 1.
CurveRing nodal_cubic_preset();
/// x -> t^2 - 1, y -> t (t^2 - 1).
PlaneEmbedding nodal_cubic_embedding();

/// True iff y^2 - x^2 (x + 1) vanishes in Q[t] and both images lie in A.
bool verify_embedding(const CurveRing& curve, const Poly& x_image, const Poly& y_image);

}  // namespace nodal
