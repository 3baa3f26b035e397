#pragma once

#include "nodal/curve.hpp"
#include "nodal/obstruction.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nodal {

inline constexpr std::string_view kCertificateSchemaVersion = "1";
inline constexpr std::string_view kToolVersion = "nodaldiff 0.1.0";

enum class Claim { NotLocallyProjective, NoBialgebroid };

enum class CheckKind {
  OperatorInDA,            // witness operator lies in D_A
  MapsAIntoI,              // lambda = 0, so D(A) in I
  WitnessInSourcePower,    // g in I^source_power
  ImageInI,                // D(g) in I
  ImageOutsideTarget,      // D(g) not in I^target_power
  PsiImageInI2,            // E(f t^m) in I^2 for E = Psi_D(dec), over a battery
  WitnessOutsidePsiImage,  // Psi_D(dec) != D for every dec in the battery
  CounitInA,               // D(1) in A
  MuUpperEscapesI2,        // D(ab) not in I^2 for the first (a, b) found
  MuLowerInI2,             // sum D1(a) D2(b) in I^2 over a battery
};

std::string_view to_string(Claim claim);
std::optional<Claim> claim_from_string(std::string_view text);
std::string_view to_string(CheckKind kind);
std::optional<CheckKind> check_kind_from_string(std::string_view text);

/// How far a recorded verdict reaches. Non-containment verdicts are exact
/// (one witness with a nonzero remainder proves them). Containment over an
/// infinite set is either exact by a structural argument or only checked up
/// to a bound.
struct Bound {
  enum class Kind { ExactStructural, ExactWitness, Bounded };
  Kind kind = Kind::ExactStructural;
  unsigned limit = 0;
  friend bool operator==(const Bound&, const Bound&) = default;
};

struct PolyEvidence {
  Poly value;
  friend bool operator==(const PolyEvidence&, const PolyEvidence&) = default;
};

struct PsiBattery {
  std::vector<Decomposition> decompositions;
  unsigned sample_bound = 0;
  friend bool operator==(const PsiBattery&, const PsiBattery&) = default;
};

struct MuUpperRecord {
  unsigned m_a = 0;
  unsigned m_b = 0;
  unsigned search_bound = 0;
  Poly value;
  friend bool operator==(const MuUpperRecord&, const MuUpperRecord&) = default;
};

struct MuLowerSample {
  TensorRepresentative pairs;
  Poly a;
  Poly b;
  friend bool operator==(const MuLowerSample&, const MuLowerSample&) = default;
};

struct MuLowerBattery {
  std::vector<MuLowerSample> samples;
  friend bool operator==(const MuLowerBattery&, const MuLowerBattery&) = default;
};

using CheckPayload =
    std::variant<std::monostate, PolyEvidence, PsiBattery, MuUpperRecord, MuLowerBattery>;

struct CheckRecord {
  CheckKind kind = CheckKind::OperatorInDA;
  std::string description;
  bool verdict = false;
  Bound bound;
  CheckPayload payload;
  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

/// Self-contained refutation record for one concrete curve. Everything a
/// replay needs is stored explicitly, including the random batteries.
struct Certificate {
  std::string schema_version{kCertificateSchemaVersion};
  std::string tool_version{kToolVersion};
  /// Wall-clock stamp; excluded from the replay hash.
  std::string created;
  Claim claim = Claim::NotLocallyProjective;
  std::vector<Poly> factors;
  Poly f;
  WitnessPair witness;
  std::vector<CheckRecord> checks;
  /// Hash read from a file; empty for freshly built certificates.
  std::string recorded_hash;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct RefutationOptions {
  std::uint64_t seed = 1;
  /// Number of random decompositions / mu_lower samples stored.
  unsigned battery_size = 32;
  /// m-range for the bounded I -> I^2 check of Psi images.
  unsigned sample_bound = 8;
  /// Replaces the constructed witness (e.g. with a nodal cubic fixture).
  std::optional<WitnessPair> witness;
};

/// Builds the condition-2 witness and records why it cannot lie in
/// Im(Psi_D). Throws std::logic_error if a supplied witness fails.
Certificate refute_local_projectivity(const CurveRing& curve, const RefutationOptions& options = {});

/// Builds the condition-3 witness and a pair (a, b) in I x I with
/// mu_upper(D)(a, b) outside I^2, plus a battery confirming mu_lower lands in
/// I^2. Throws BoundExhausted if no pair is found with m_a, m_b <= search_bound.
Certificate refute_bialgebroid(const CurveRing& curve, unsigned search_bound,
                               const RefutationOptions& options = {});

struct CheckReplay {
  std::size_t index = 0;
  CheckKind kind = CheckKind::OperatorInDA;
  bool recorded = false;
  bool replayed = false;
  bool evidence_matches = true;
  std::string detail;
  bool reproduced() const { return recorded == replayed && evidence_matches; }
};

struct ReplayReport {
  bool curve_matches = true;
  /// Source/target powers are the ones the claim's argument needs:
  /// I -> I^2 for local projectivity, I^2 -> I^2 for the bialgebroid.
  bool witness_shape_matches = true;
  std::vector<CheckReplay> checks;
  std::vector<CheckKind> missing;
  /// Every recorded verdict and evidence value reproduced.
  bool all_reproduced() const;
  /// All reproduced, all verdicts true, and every check the claim needs present.
  bool proves_claim() const;
  /// Index into checks of the first non-reproduced entry.
  std::optional<std::size_t> first_failure() const;
};

/// Re-runs every recorded check from the certificate's own data. Throws
/// CurveError if the stored factors do not form a valid curve.
ReplayReport replay_certificate(const Certificate& certificate);

}  // namespace nodal
