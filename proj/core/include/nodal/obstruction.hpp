#pragma once

#include "nodal/curve.hpp"
#include "nodal/poly.hpp"
#include "nodal/weyl.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace nodal {

/// One summand a (x) D of an element of A (x) D_A.
struct DecompositionTerm {
  Poly a;
  WeylOp op;
  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

/// Finite sum of a_i (x) D_i with a_i in A and D_i in D_A; empty means 0.
using Decomposition = std::vector<DecompositionTerm>;

/// One summand D1 (x)_A D2 of a representative of an element of
/// D_A (x)_A D_A. Everything downstream works on representatives: the
/// containment arguments hold for each representative, so no normal form
/// for the balanced tensor product is needed.
struct TensorTerm {
  WeylOp left;
  WeylOp right;
  friend bool operator==(const TensorTerm&, const TensorTerm&) = default;
};

using TensorRepresentative = std::vector<TensorTerm>;

/// An operator D in D_A together with g in I^source_power such that
/// D(g) is not in I^target_power.
struct WitnessPair {
  WeylOp op;
  Poly witness;
  unsigned source_power = 1;
  unsigned target_power = 2;
  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

/// Throws MembershipError naming the first entry with a_i outside A or
/// D_i outside D_A.
void validate_decomposition(const CurveRing& curve, const Decomposition& dec);

/// Psi_D(sum a_i (x) D_i) = sum D(a_i) D_i.
WeylOp psi_apply(const CurveRing& curve, const WeylOp& op, const Decomposition& dec);

/// True iff D = sum D(a_i) D_i exactly, i.e. dec exhibits D in Im(Psi_D).
bool verify_lp_certificate(const CurveRing& curve, const WeylOp& op, const Decomposition& dec);

/// (1 / (c n!)) d^n for g of degree n >= 1 with leading coefficient c.
/// Sends g to 1 and, since n >= 1, kills constants.
WeylOp construct_raiser(const Poly& g, bool kill_constants);

/// D = f * raiser(f), g = f: D(A) in I and D(g) = f not in I^2.
WitnessPair build_condition2_witness(const CurveRing& curve);

/// D = f * raiser(f^2), g = f^2: D(g) = f not in I^2.
WitnessPair build_condition3_witness(const CurveRing& curve);

/// Fixture operators for the nodal cubic f = t^2 - 1: (t^2 - 1) d with
/// g = f, and (t^2 - 1) d^2 with g = f^2.
WitnessPair nodal_cubic_condition2_fixture();
WitnessPair nodal_cubic_condition3_fixture();

/// Replays the three defining checks of a witness pair: operator in D_A,
/// witness in I^source_power, image outside I^target_power.
bool witness_holds(const CurveRing& curve, const WitnessPair& w);

/// Bounded confirmation that E = Psi_D(dec) maps f t^m into I^2 for
/// m <= sample_bound. Requires D in D_A with D(A) in I.
///
/// The containment itself is exact: D(a_i) lies in I and D_i(I) lies in I,
/// so D(a_i) D_i (g) lies in I^2 for g in I.
bool check_psi_image_containment(const CurveRing& curve, const WeylOp& op,
                                 const Decomposition& dec, unsigned sample_bound);

/// Smallest g = f^source_power t^m, 0 <= m <= bound, with D(g) outside
/// I^target_power.
std::optional<Poly> search_noncontainment(const CurveRing& curve, const WeylOp& op,
                                          unsigned source_power, unsigned target_power,
                                          unsigned bound);

/// mu_lower(sum D1_i (x) D2_i)(a (x) b) = sum D1_i(a) D2_i(b).
Poly mu_lower(const CurveRing& curve, const TensorRepresentative& pairs, const Poly& a,
              const Poly& b);

/// mu_upper(D)(a (x) b) = D(ab).
Poly mu_upper(const WeylOp& op, const Poly& a, const Poly& b);

/// D(1).
Poly counit(const WeylOp& op);

/// First (m_a, m_b) in lexicographic order with m_a, m_b <= bound such that
/// D(f t^m_a * f t^m_b) is outside I^2.
struct MuUpperHit {
  unsigned m_a = 0;
  unsigned m_b = 0;
  Poly a;
  Poly b;
  Poly value;
};
std::optional<MuUpperHit> search_mu_upper_escape(const CurveRing& curve, const WeylOp& op,
                                                 unsigned bound);

struct SuiteReport {
  std::size_t passed = 0;
  std::size_t total = 0;
  bool all_passed() const { return passed == total; }
};

/// Random D in D_A and g in I (degrees and orders <= max_size); counts how
/// many satisfy D(g) in I.
SuiteReport check_ideal_stability(const CurveRing& curve, std::size_t samples,
                                  std::uint64_t seed, int max_size = 6);

}  // namespace nodal
