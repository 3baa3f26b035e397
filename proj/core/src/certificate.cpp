#include "nodal/certificate.hpp"

#include "nodal/errors.hpp"
#include "nodal/sampling.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace nodal {

namespace {

constexpr std::array<std::pair<Claim, std::string_view>, 2> kClaimNames{{
    {Claim::NotLocallyProjective, "NotLocallyProjective"},
    {Claim::NoBialgebroid, "NoBialgebroid"},
}};

constexpr std::array<std::pair<CheckKind, std::string_view>, 10> kCheckNames{{
    {CheckKind::OperatorInDA, "operator_in_DA"},
    {CheckKind::MapsAIntoI, "maps_A_into_I"},
    {CheckKind::WitnessInSourcePower, "witness_in_source_power"},
    {CheckKind::ImageInI, "image_in_I"},
    {CheckKind::ImageOutsideTarget, "image_outside_target_power"},
    {CheckKind::PsiImageInI2, "psi_image_maps_I_into_I2"},
    {CheckKind::WitnessOutsidePsiImage, "witness_outside_psi_image"},
    {CheckKind::CounitInA, "counit_in_A"},
    {CheckKind::MuUpperEscapesI2, "mu_upper_escapes_I2"},
    {CheckKind::MuLowerInI2, "mu_lower_lands_in_I2"},
}};

const std::vector<CheckKind>& required_checks(Claim claim) {
  static const std::vector<CheckKind> locproj{
      CheckKind::OperatorInDA,       CheckKind::MapsAIntoI,   CheckKind::WitnessInSourcePower,
      CheckKind::ImageInI,           CheckKind::ImageOutsideTarget,
      CheckKind::PsiImageInI2,       CheckKind::WitnessOutsidePsiImage,
  };
  static const std::vector<CheckKind> bialgebroid{
      CheckKind::OperatorInDA,     CheckKind::WitnessInSourcePower, CheckKind::ImageOutsideTarget,
      CheckKind::CounitInA,        CheckKind::MuUpperEscapesI2,     CheckKind::MuLowerInI2,
  };
  return claim == Claim::NotLocallyProjective ? locproj : bialgebroid;
}

struct Evaluation {
  bool verdict = false;
  CheckPayload payload;
};

bool psi_battery_contained(const CurveRing& curve, const WeylOp& op, const PsiBattery& battery) {
  try {
    return std::all_of(battery.decompositions.begin(), battery.decompositions.end(),
                       [&](const Decomposition& dec) {
                         return check_psi_image_containment(curve, op, dec, battery.sample_bound);
                       });
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool psi_battery_excludes(const CurveRing& curve, const WeylOp& op, const PsiBattery& battery) {
  try {
    return std::none_of(battery.decompositions.begin(), battery.decompositions.end(),
                        [&](const Decomposition& dec) { return verify_lp_certificate(curve, op, dec); });
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool mu_lower_battery_contained(const CurveRing& curve, const MuLowerBattery& battery) {
  try {
    return std::all_of(battery.samples.begin(), battery.samples.end(), [&](const MuLowerSample& s) {
      return ideal_power_member(curve, s.a, 1) && ideal_power_member(curve, s.b, 1) &&
             ideal_power_member(curve, mu_lower(curve, s.pairs, s.a, s.b), 2);
    });
  } catch (const std::invalid_argument&) {
    return false;
  }
}

// Battery-style payloads are inputs to the check; evidence-style payloads
// are outputs and are compared on replay.
Evaluation evaluate(CheckKind kind, const CurveRing& curve, const WitnessPair& w,
                    const CheckPayload& input) {
  const WeylOp& op = w.op;
  switch (kind) {
    case CheckKind::OperatorInDA:
      return {da_decompose(curve, op).has_value(), {}};
    case CheckKind::MapsAIntoI: {
      const auto dec = da_decompose(curve, op);
      return {dec.has_value() && dec->lambda.is_zero(), {}};
    }
    case CheckKind::WitnessInSourcePower:
      return {ideal_power_member(curve, w.witness, w.source_power), {}};
    case CheckKind::ImageInI: {
      Poly image = weyl_apply(op, w.witness);
      const bool in_i = ideal_power_member(curve, image, 1);
      return {in_i, PolyEvidence{std::move(image)}};
    }
    case CheckKind::ImageOutsideTarget: {
      Poly rem = poly_divrem(weyl_apply(op, w.witness), curve.f_power(w.target_power)).remainder;
      const bool outside = !rem.is_zero();
      return {outside, PolyEvidence{std::move(rem)}};
    }
    case CheckKind::PsiImageInI2: {
      const auto* battery = std::get_if<PsiBattery>(&input);
      return {battery != nullptr && psi_battery_contained(curve, op, *battery), input};
    }
    case CheckKind::WitnessOutsidePsiImage: {
      const auto* battery = std::get_if<PsiBattery>(&input);
      return {battery != nullptr && psi_battery_excludes(curve, op, *battery), input};
    }
    case CheckKind::CounitInA: {
      Poly value = counit(op);
      const bool in_a = subalgebra_member(curve, value).has_value();
      return {in_a, PolyEvidence{std::move(value)}};
    }
    case CheckKind::MuUpperEscapesI2: {
      const auto* recorded = std::get_if<MuUpperRecord>(&input);
      const unsigned bound = recorded != nullptr ? recorded->search_bound : 0;
      auto hit = da_decompose(curve, op) ? search_mu_upper_escape(curve, op, bound) : std::nullopt;
      if (!hit) return {false, MuUpperRecord{0, 0, bound, Poly()}};
      return {true, MuUpperRecord{hit->m_a, hit->m_b, bound, std::move(hit->value)}};
    }
    case CheckKind::MuLowerInI2: {
      const auto* battery = std::get_if<MuLowerBattery>(&input);
      return {battery != nullptr && mu_lower_battery_contained(curve, *battery), input};
    }
  }
  return {false, {}};
}

std::string describe(CheckKind kind, const WitnessPair& w) {
  const std::string d = "D = " + w.op.to_string();
  const std::string g = "g = " + w.witness.to_string();
  const std::string source = w.source_power == 1 ? "I" : "I^" + std::to_string(w.source_power);
  const std::string target = w.target_power == 1 ? "I" : "I^" + std::to_string(w.target_power);
  switch (kind) {
    case CheckKind::OperatorInDA: return d + " lies in D_A = k + I D_B";
    case CheckKind::MapsAIntoI: return d + " has lambda = 0, hence D(A) in I";
    case CheckKind::WitnessInSourcePower: return g + " lies in " + source;
    case CheckKind::ImageInI: return "D(g) lies in I";
    case CheckKind::ImageOutsideTarget: return "D(g) does not lie in " + target + " (nonzero remainder)";
    case CheckKind::PsiImageInI2: return "every E = Psi_D(dec) in the battery maps f t^m into I^2";
    case CheckKind::WitnessOutsidePsiImage: return "Psi_D(dec) != D for every dec in the battery";
    case CheckKind::CounitInA: return "counit D(1) lies in A";
    case CheckKind::MuUpperEscapesI2: return "D(ab) not in I^2 for a, b in I: mu_upper(D) not in Im mu_lower";
    case CheckKind::MuLowerInI2: return "mu_lower(D1 (x) D2)(a (x) b) lies in I^2 for a, b in I";
  }
  return {};
}

CheckRecord record(CheckKind kind, Bound bound, const CurveRing& curve, const WitnessPair& w,
                   const CheckPayload& input = {}) {
  Evaluation e = evaluate(kind, curve, w, input);
  return {kind, describe(kind, w), e.verdict, bound, std::move(e.payload)};
}

Certificate skeleton(Claim claim, const CurveRing& curve, WitnessPair witness) {
  Certificate cert;
  cert.claim = claim;
  cert.factors = curve.factors();
  cert.f = curve.f();
  cert.witness = std::move(witness);
  return cert;
}

void require_all_true(const Certificate& cert) {
  for (const auto& check : cert.checks) {
    if (!check.verdict) {
      throw std::logic_error("refutation check failed: " + std::string(to_string(check.kind)));
    }
  }
}

constexpr Bound kStructural{Bound::Kind::ExactStructural, 0};
constexpr Bound kWitness{Bound::Kind::ExactWitness, 0};

}  // namespace

std::string_view to_string(Claim claim) {
  for (const auto& [c, name] : kClaimNames) {
    if (c == claim) return name;
  }
  return "?";
}

std::optional<Claim> claim_from_string(std::string_view text) {
  for (const auto& [c, name] : kClaimNames) {
    if (name == text) return c;
  }
  return std::nullopt;
}

std::string_view to_string(CheckKind kind) {
  for (const auto& [k, name] : kCheckNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<CheckKind> check_kind_from_string(std::string_view text) {
  for (const auto& [k, name] : kCheckNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

Certificate refute_local_projectivity(const CurveRing& curve, const RefutationOptions& options) {
  WitnessPair w = options.witness.value_or(build_condition2_witness(curve));
  Certificate cert = skeleton(Claim::NotLocallyProjective, curve, w);

  SampleSource source(options.seed);
  PsiBattery battery{{}, options.sample_bound};
  for (unsigned k = 0; k < options.battery_size; ++k) {
    Decomposition dec;
    const auto terms = source.uniform(1, 3);
    for (std::int64_t n = 0; n < terms; ++n) {
      dec.push_back({source.a_element(curve, 2), source.da_element(curve, 2, 2)});
    }
    battery.decompositions.push_back(std::move(dec));
  }

  cert.checks.push_back(record(CheckKind::OperatorInDA, kStructural, curve, w));
  cert.checks.push_back(record(CheckKind::MapsAIntoI, kStructural, curve, w));
  cert.checks.push_back(record(CheckKind::WitnessInSourcePower, kStructural, curve, w));
  cert.checks.push_back(record(CheckKind::ImageInI, kStructural, curve, w));
  cert.checks.push_back(record(CheckKind::ImageOutsideTarget, kWitness, curve, w));
  cert.checks.push_back(record(CheckKind::PsiImageInI2,
                               {Bound::Kind::Bounded, options.sample_bound}, curve, w, battery));
  cert.checks.push_back(record(CheckKind::WitnessOutsidePsiImage,
                               {Bound::Kind::Bounded, options.battery_size}, curve, w, battery));
  require_all_true(cert);
  return cert;
}

Certificate refute_bialgebroid(const CurveRing& curve, unsigned search_bound,
                               const RefutationOptions& options) {
  WitnessPair w = options.witness.value_or(build_condition3_witness(curve));
  Certificate cert = skeleton(Claim::NoBialgebroid, curve, w);

  if (!search_mu_upper_escape(curve, w.op, search_bound)) {
    throw BoundExhausted("search bound exhausted: no (a, b) with m <= " +
                         std::to_string(search_bound));
  }

  SampleSource source(options.seed);
  MuLowerBattery battery;
  for (unsigned k = 0; k < options.battery_size; ++k) {
    MuLowerSample sample;
    const auto terms = source.uniform(1, 2);
    for (std::int64_t n = 0; n < terms; ++n) {
      sample.pairs.push_back({source.da_element(curve, 2, 2), source.da_element(curve, 2, 2)});
    }
    sample.a = source.ideal_element(curve, 1, 2);
    sample.b = source.ideal_element(curve, 1, 2);
    battery.samples.push_back(std::move(sample));
  }

  cert.checks.push_back(record(CheckKind::OperatorInDA, kStructural, curve, w));
  cert.checks.push_back(record(CheckKind::WitnessInSourcePower, kStructural, curve, w));
  cert.checks.push_back(record(CheckKind::ImageOutsideTarget, kWitness, curve, w));
  cert.checks.push_back(record(CheckKind::CounitInA, kStructural, curve, w));
  cert.checks.push_back(record(CheckKind::MuUpperEscapesI2, kWitness, curve, w,
                               MuUpperRecord{0, 0, search_bound, Poly()}));
  cert.checks.push_back(record(CheckKind::MuLowerInI2,
                               {Bound::Kind::Bounded, options.battery_size}, curve, w, battery));
  require_all_true(cert);
  return cert;
}

bool ReplayReport::all_reproduced() const {
  return curve_matches && std::all_of(checks.begin(), checks.end(),
                                      [](const CheckReplay& c) { return c.reproduced(); });
}

bool ReplayReport::proves_claim() const {
  return all_reproduced() && missing.empty() && witness_shape_matches &&
         std::all_of(checks.begin(), checks.end(), [](const CheckReplay& c) { return c.replayed; });
}

std::optional<std::size_t> ReplayReport::first_failure() const {
  for (std::size_t k = 0; k < checks.size(); ++k) {
    if (!checks[k].reproduced()) return k;
  }
  return std::nullopt;
}

ReplayReport replay_certificate(const Certificate& certificate) {
  const CurveRing curve = new_curve(certificate.factors);
  ReplayReport report;
  report.curve_matches = curve.f() == certificate.f;
  const WitnessPair& w = certificate.witness;
  report.witness_shape_matches =
      certificate.claim == Claim::NotLocallyProjective
          ? (w.source_power == 1 && w.target_power == 2)
          : (w.source_power == 2 && w.target_power == 2);

  for (std::size_t k = 0; k < certificate.checks.size(); ++k) {
    const CheckRecord& rec = certificate.checks[k];
    const Evaluation e = evaluate(rec.kind, curve, certificate.witness, rec.payload);
    CheckReplay out;
    out.index = k;
    out.kind = rec.kind;
    out.recorded = rec.verdict;
    out.replayed = e.verdict;
    out.evidence_matches = e.payload == rec.payload;
    if (out.recorded != out.replayed) {
      out.detail = "verdict recorded " + std::string(rec.verdict ? "true" : "false") +
                   ", replayed " + std::string(e.verdict ? "true" : "false");
    } else if (!out.evidence_matches) {
      out.detail = "recorded evidence differs from recomputed value";
    }
    report.checks.push_back(std::move(out));
  }

  for (CheckKind needed : required_checks(certificate.claim)) {
    const bool present = std::any_of(certificate.checks.begin(), certificate.checks.end(),
                                     [&](const CheckRecord& c) { return c.kind == needed; });
    if (!present) report.missing.push_back(needed);
  }
  return report;
}

}  // namespace nodal
