#pragma once

#include "nodal/curve.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nodal::cli {

enum ExitCode : int {
  kSuccess = 0,
  kRefuted = 1,  // non-member, failed replay
  kInvalidInput = 2,
  kIoFailure = 3,
  kBoundExhausted = 4,
};

/// Curve selection shared by member, lemma and refute.
struct CurveFlags {
  std::optional<std::string> preset;
  std::vector<std::string> factors;
  bool strict_irreducible = false;
};

/// Builds the curve; throws CurveError or ParseError on bad input.
CurveRing resolve_curve(const CurveFlags& flags);

/// Canonical normal form of an operator expression.
std::string cmd_normalize(std::string_view expr);

/// Result of applying an operator expression to a polynomial expression.
std::string cmd_apply(std::string_view expr, std::string_view poly);

struct Outcome {
  int exit_code = kSuccess;
  std::string report;
};

enum class MemberTarget { A, DA, IdealPower };

Outcome cmd_member(const CurveRing& curve, MemberTarget target, unsigned power, std::string_view expr);

struct LemmaOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 500;
};

Outcome cmd_lemma(const CurveRing& curve, int which, const LemmaOptions& options);

enum class RefuteTarget { LocalProjectivity, Bialgebroid };

struct RefuteOptions {
  std::uint64_t seed = 1;
  std::optional<unsigned> bound;
  bool example_operator = false;
  /// Leave empty for the current UTC time.
  std::optional<std::string> timestamp;
};

/// Builds the certificate document. Summary text goes to report, the
/// serialized certificate to document.
struct RefuteOutcome {
  int exit_code = kSuccess;
  std::string report;
  std::string document;
};

RefuteOutcome cmd_refute(const CurveRing& curve, RefuteTarget target, const RefuteOptions& options);

/// Replays a serialized certificate.
Outcome cmd_verify_document(std::string_view document);

/// Reads a certificate from disk and replays it.
Outcome cmd_verify(const std::string& path);

/// Full command-line entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nodal::cli
