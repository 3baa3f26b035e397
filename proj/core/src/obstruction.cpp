#include "nodal/obstruction.hpp"

#include "nodal/errors.hpp"
#include "nodal/sampling.hpp"

#include <string>

namespace nodal {

namespace {

void require_in_da(const CurveRing& curve, const WeylOp& op, const std::string& what) {
  if (!da_decompose(curve, op)) throw MembershipError(what + " not in D_A: " + op.to_string());
}

}  // namespace

void validate_decomposition(const CurveRing& curve, const Decomposition& dec) {
  for (std::size_t k = 0; k < dec.size(); ++k) {
    if (!subalgebra_member(curve, dec[k].a)) {
      throw MembershipError("decomposition entry " + std::to_string(k) +
                            ": a = " + dec[k].a.to_string() + " not in A");
    }
    if (!da_decompose(curve, dec[k].op)) {
      throw MembershipError("decomposition entry " + std::to_string(k) +
                            ": operator " + dec[k].op.to_string() + " not in D_A");
    }
  }
}

WeylOp psi_apply(const CurveRing& curve, const WeylOp& op, const Decomposition& dec) {
  require_in_da(curve, op, "operator");
  validate_decomposition(curve, dec);
  WeylOp out;
  for (const auto& term : dec) out += weyl_mul(from_poly(weyl_apply(op, term.a)), term.op);
  return out;
}

bool verify_lp_certificate(const CurveRing& curve, const WeylOp& op, const Decomposition& dec) {
  return psi_apply(curve, op, dec) == op;
}

WeylOp construct_raiser(const Poly& g, bool kill_constants) {
  const int n = g.degree();
  if (n < 1) throw std::invalid_argument("no raiser for constants: " + g.to_string());
  mpz_class factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= k;
  const Rational scale = (g.leading_coefficient() * Rational(factorial)).inverse();
  WeylOp raiser = WeylOp::term(0, n, scale);
  // d^n with n >= 1 always kills constants; the flag documents the caller's
  // requirement rather than selecting a construction.
  if (kill_constants && !weyl_apply(raiser, Poly(1)).is_zero()) {
    throw std::logic_error("raiser does not kill constants");
  }
  return raiser;
}

WitnessPair build_condition2_witness(const CurveRing& curve) {
  const Poly& f = curve.f();
  return {weyl_mul(from_poly(f), construct_raiser(f, true)), f, 1, 2};
}

WitnessPair build_condition3_witness(const CurveRing& curve) {
  const Poly g = curve.f_power(2);
  return {weyl_mul(from_poly(curve.f()), construct_raiser(g, false)), g, 2, 2};
}

WitnessPair nodal_cubic_condition2_fixture() {
  const Poly f = Poly::from_coefficients({-1, 0, 1});
  return {weyl_mul(from_poly(f), WeylOp::d()), f, 1, 2};
}

WitnessPair nodal_cubic_condition3_fixture() {
  const Poly f = Poly::from_coefficients({-1, 0, 1});
  return {weyl_mul(from_poly(f), WeylOp::term(0, 2)), f * f, 2, 2};
}

bool witness_holds(const CurveRing& curve, const WitnessPair& w) {
  return da_decompose(curve, w.op).has_value() &&
         ideal_power_member(curve, w.witness, w.source_power) &&
         !ideal_power_member(curve, weyl_apply(w.op, w.witness), w.target_power);
}

bool check_psi_image_containment(const CurveRing& curve, const WeylOp& op,
                                 const Decomposition& dec, unsigned sample_bound) {
  if (!maps_A_into_I(curve, op)) {
    throw std::invalid_argument("operator does not map A into I: " + op.to_string());
  }
  const WeylOp image = psi_apply(curve, op, dec);
  for (const auto& g : ideal_spanning_set(curve, 1, sample_bound)) {
    if (!ideal_power_member(curve, weyl_apply(image, g), 2)) return false;
  }
  return true;
}

std::optional<Poly> search_noncontainment(const CurveRing& curve, const WeylOp& op,
                                          unsigned source_power, unsigned target_power,
                                          unsigned bound) {
  require_in_da(curve, op, "operator");
  for (const auto& g : ideal_spanning_set(curve, source_power, bound)) {
    if (!ideal_power_member(curve, weyl_apply(op, g), target_power)) return g;
  }
  return std::nullopt;
}

Poly mu_lower(const CurveRing& curve, const TensorRepresentative& pairs, const Poly& a,
              const Poly& b) {
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    require_in_da(curve, pairs[k].left, "pair " + std::to_string(k) + " left factor");
    require_in_da(curve, pairs[k].right, "pair " + std::to_string(k) + " right factor");
  }
  Poly out;
  for (const auto& term : pairs) out += weyl_apply(term.left, a) * weyl_apply(term.right, b);
  return out;
}

Poly mu_upper(const WeylOp& op, const Poly& a, const Poly& b) { return weyl_apply(op, a * b); }

Poly counit(const WeylOp& op) { return weyl_apply(op, Poly(1)); }

std::optional<MuUpperHit> search_mu_upper_escape(const CurveRing& curve, const WeylOp& op,
                                                 unsigned bound) {
  const auto basis = ideal_spanning_set(curve, 1, bound);
  for (unsigned ma = 0; ma <= bound; ++ma) {
    for (unsigned mb = 0; mb <= bound; ++mb) {
      Poly value = mu_upper(op, basis[ma], basis[mb]);
      if (!ideal_power_member(curve, value, 2)) {
        return MuUpperHit{ma, mb, basis[ma], basis[mb], std::move(value)};
      }
    }
  }
  return std::nullopt;
}

SuiteReport check_ideal_stability(const CurveRing& curve, std::size_t samples,
                                  std::uint64_t seed, int max_size) {
  SampleSource source(seed);
  SuiteReport report;
  for (std::size_t k = 0; k < samples; ++k) {
    const WeylOp op = source.da_element(curve, max_size, max_size);
    const Poly g = source.ideal_element(curve, 1, max_size);
    ++report.total;
    if (ideal_power_member(curve, weyl_apply(op, g), 1)) ++report.passed;
  }
  return report;
}

}  // namespace nodal
