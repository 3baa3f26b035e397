#include "commands.hpp"

#include "nodal/certificate.hpp"
#include "nodal/certificate_io.hpp"
#include "nodal/errors.hpp"
#include "nodal/expr.hpp"
#include "nodal/obstruction.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

namespace nodal::cli {

namespace {

constexpr std::string_view kNodalCubic = "nodal-cubic";
constexpr unsigned kDefaultSampleBound = 8;
constexpr unsigned kDefaultSearchBound = 4;

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string power_name(unsigned n) { return n == 1 ? "I" : "I^" + std::to_string(n); }

std::string bound_name(const Bound& b) {
  switch (b.kind) {
    case Bound::Kind::ExactStructural: return "exact, structural";
    case Bound::Kind::ExactWitness: return "exact, witness";
    case Bound::Kind::Bounded: return "verified to bound " + std::to_string(b.limit);
  }
  return {};
}

bool is_nodal_cubic(const CurveRing& curve) {
  return curve.f() == Poly::from_coefficients({-1, 0, 1});
}

void describe_witness(std::ostream& os, const CurveRing& curve, const WitnessPair& w) {
  const Poly image = weyl_apply(w.op, w.witness);
  const auto dec = da_decompose(curve, w.op);
  os << "  D        = " << w.op.to_string() << "\n"
     << "  g        = " << w.witness.to_string() << "  (in " << power_name(w.source_power) << ": "
     << (ideal_power_member(curve, w.witness, w.source_power) ? "yes" : "no") << ")\n"
     << "  D in D_A : " << (dec ? "yes, lambda = " + dec->lambda.to_string() : std::string("no")) << "\n"
     << "  D(g)     = " << image.to_string() << "\n"
     << "  D(g) mod f^" << w.target_power << " = "
     << poly_divrem(image, curve.f_power(w.target_power)).remainder.to_string() << "  (D(g) "
     << (ideal_power_member(curve, image, w.target_power) ? "in " : "not in ")
     << power_name(w.target_power) << ")\n";
}

}  // namespace

CurveRing resolve_curve(const CurveFlags& flags) {
  if (flags.preset && !flags.factors.empty()) {
    throw CurveError("--preset and --factors are mutually exclusive");
  }
  const CurveOptions options{flags.strict_irreducible};
  if (flags.preset) {
    if (*flags.preset != kNodalCubic) throw CurveError("unknown preset '" + *flags.preset + "'");
    return new_curve(nodal_cubic_preset().factors(), options);
  }
  if (flags.factors.empty()) throw CurveError("a curve is required: use --preset or --factors");
  std::vector<Poly> factors;
  for (const auto& text : flags.factors) factors.push_back(parse_polynomial(text));
  return new_curve(std::move(factors), options);
}

std::string cmd_normalize(std::string_view expr) { return parse_operator(expr).to_string(); }

std::string cmd_apply(std::string_view expr, std::string_view poly) {
  return weyl_apply(parse_operator(expr), parse_polynomial(poly)).to_string();
}

Outcome cmd_member(const CurveRing& curve, MemberTarget target, unsigned power,
                   std::string_view expr) {
  std::ostringstream os;
  switch (target) {
    case MemberTarget::A: {
      const Poly p = parse_polynomial(expr);
      if (const auto lambda = subalgebra_member(curve, p)) {
        os << "member of A = k + I\n"
           << "  lambda = " << lambda->to_string() << "\n"
           << "  (p - lambda) / f = " << poly_divrem(p - Poly(*lambda), curve.f()).quotient.to_string()
           << "\n";
        return {kSuccess, os.str()};
      }
      os << "not in A = k + I\n"
         << "  p mod f = " << poly_divrem(p, curve.f()).remainder.to_string()
         << " is not a constant\n";
      return {kRefuted, os.str()};
    }
    case MemberTarget::DA: {
      const WeylOp op = parse_operator(expr);
      if (const auto dec = da_decompose(curve, op)) {
        os << "member of D_A = k + I D_B\n"
           << "  lambda = " << dec->lambda.to_string() << "\n"
           << "  D' = " << dec->dprime.to_string() << "\n";
        return {kSuccess, os.str()};
      }
      os << "not in D_A = k + I D_B\n";
      for (const auto& [j, coeff] : op.coefficient_polys()) {
        const Poly rem = poly_divrem(coeff, curve.f()).remainder;
        if (j == 0 && !rem.is_constant()) {
          os << "  coefficient of d^0 is " << coeff.to_string() << ", remainder mod f = "
             << rem.to_string() << " (not a constant)\n";
          break;
        }
        if (j > 0 && !rem.is_zero()) {
          os << "  coefficient of d^" << j << " is " << coeff.to_string()
             << ", remainder mod f = " << rem.to_string() << " (f does not divide it)\n";
          break;
        }
      }
      return {kRefuted, os.str()};
    }
    case MemberTarget::IdealPower: {
      const Poly p = parse_polynomial(expr);
      const auto [q, r] = poly_divrem(p, curve.f_power(power));
      if (r.is_zero()) {
        os << "member of " << power_name(power) << "\n  p / f^" << power << " = " << q.to_string() << "\n";
        return {kSuccess, os.str()};
      }
      os << "not in " << power_name(power) << "\n  p mod f^" << power << " = " << r.to_string() << "\n";
      return {kRefuted, os.str()};
    }
  }
  return {kInvalidInput, "unknown membership target\n"};
}

Outcome cmd_lemma(const CurveRing& curve, int which, const LemmaOptions& options) {
  std::ostringstream os;
  os << "curve f = " << curve.f().to_string() << "\n";
  switch (which) {
    case 1: {
      const SuiteReport report = check_ideal_stability(curve, options.samples, options.seed);
      os << "D(I) in I for D in D_A (random D = lambda + f D', g = f h)\n"
         << report.passed << "/" << report.total << " samples in I\n";
      return {report.all_passed() ? kSuccess : kRefuted, os.str()};
    }
    case 2:
    case 3: {
      const WitnessPair w =
          which == 2 ? build_condition2_witness(curve) : build_condition3_witness(curve);
      os << (which == 2 ? "D in D_A with D(A) in I and D(I) not in I^2\n"
                        : "D in D_A with D(I^2) not in I^2\n");
      describe_witness(os, curve, w);
      bool ok = witness_holds(curve, w);
      if (which == 2) {
        const bool maps = maps_A_into_I(curve, w.op);
        os << "  D(A) in I: " << (maps ? "yes" : "no") << "\n";
        ok = ok && maps;
      }
      if (is_nodal_cubic(curve)) {
        const WitnessPair fixture =
            which == 2 ? nodal_cubic_condition2_fixture() : nodal_cubic_condition3_fixture();
        os << "nodal cubic operator " << fixture.op.to_string() << ":\n";
        describe_witness(os, curve, fixture);
        ok = ok && witness_holds(curve, fixture);
      }
      os << (ok ? "witness verified\n" : "witness FAILED\n");
      return {ok ? kSuccess : kRefuted, os.str()};
    }
    default:
      return {kInvalidInput, "lemma part must be 1, 2 or 3\n"};
  }
}

RefuteOutcome cmd_refute(const CurveRing& curve, RefuteTarget target, const RefuteOptions& options) {
  RefutationOptions ropts;
  ropts.seed = options.seed;
  if (options.example_operator) {
    if (!is_nodal_cubic(curve)) {
      return {kInvalidInput, "--example-operator requires the nodal cubic (f = t^2 - 1)\n", {}};
    }
    ropts.witness = target == RefuteTarget::LocalProjectivity ? nodal_cubic_condition2_fixture()
                                                              : nodal_cubic_condition3_fixture();
  }
  Certificate cert;
  try {
    if (target == RefuteTarget::LocalProjectivity) {
      ropts.sample_bound = options.bound.value_or(kDefaultSampleBound);
      cert = refute_local_projectivity(curve, ropts);
    } else {
      cert = refute_bialgebroid(curve, options.bound.value_or(kDefaultSearchBound), ropts);
    }
  } catch (const BoundExhausted& e) {
    return {kBoundExhausted, std::string(e.what()) + "\n", {}};
  }
  cert.created = options.timestamp.value_or(utc_now());

  std::ostringstream os;
  os << "claim: " << to_string(cert.claim) << "\n"
     << "curve f = " << cert.f.to_string() << "\n"
     << "witness D = " << cert.witness.op.to_string() << ", g = " << cert.witness.witness.to_string()
     << "\n";
  for (const auto& check : cert.checks) {
    os << "  [" << (check.verdict ? "ok" : "FAIL") << "] " << to_string(check.kind) << ": "
       << check.description << " (" << bound_name(check.bound) << ")\n";
  }
  os << "replay hash " << replay_hash(cert) << "\n";
  return {kSuccess, os.str(), serialize_certificate(cert)};
}

Outcome cmd_verify_document(std::string_view document) {
  Certificate cert;
  try {
    cert = parse_certificate(document);
  } catch (const CertificateFormatError& e) {
    return {kInvalidInput, std::string("malformed certificate: ") + e.what() + "\n"};
  }
  ReplayReport report;
  try {
    report = replay_certificate(cert);
  } catch (const CurveError& e) {
    return {kInvalidInput, std::string("invalid curve in certificate: ") + e.what() + "\n"};
  }

  std::ostringstream os;
  os << "claim: " << to_string(cert.claim) << "\n";
  if (!report.curve_matches) os << "  [FAIL] stored f does not equal the product of the factors\n";
  if (!report.witness_shape_matches) {
    os << "  [FAIL] witness powers do not match the claim\n";
  }
  for (const auto& c : report.checks) {
    os << "  [" << (c.reproduced() ? "ok" : "FAIL") << "] " << to_string(c.kind);
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  for (CheckKind kind : report.missing) os << "  [FAIL] missing check " << to_string(kind) << "\n";

  const bool hash_ok = cert.recorded_hash == replay_hash(cert);
  if (!hash_ok) os << "  [FAIL] replay hash mismatch\n";

  if (const auto first = report.first_failure()) {
    os << "verification failed at check " << *first << " ("
       << to_string(report.checks[*first].kind) << ")\n";
    return {kRefuted, os.str()};
  }
  if (!report.proves_claim() || !hash_ok) {
    os << "verification failed\n";
    return {kRefuted, os.str()};
  }
  os << "all " << report.checks.size() << " checks reproduced\n";
  return {kSuccess, os.str()};
}

Outcome cmd_verify(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {kIoFailure, "cannot read " + path + "\n"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return cmd_verify_document(buf.str());
}

namespace {

// "--factors a b c" would swallow the trailing positional arguments, so
// consume only tokens that parse as nonconstant polynomials and rewrite
// them as repeated "--factors=x".
std::vector<std::string> expand_factor_lists(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] != "--factors") {
      out.push_back(args[k]);
      continue;
    }
    std::size_t next = k + 1;
    for (; next < args.size(); ++next) {
      const std::string& tok = args[next];
      if (tok.rfind("--", 0) == 0) break;
      try {
        if (parse_polynomial(tok).is_constant()) break;
      } catch (const std::invalid_argument&) {
        break;
      }
      out.push_back("--factors=" + tok);
    }
    if (next == k + 1) out.push_back(args[k]);  // let CLI11 report the missing value
    k = next - 1;
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differential operators on nodal curves: normal forms, membership, refutation certificates",
               "nodaldiff"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kToolVersion));

  CurveFlags curve_flags;
  std::optional<unsigned> bound;
  std::optional<std::string> out_path;
  std::uint64_t seed = 1;
  bool example_operator = false;

  app.add_option("--preset", curve_flags.preset, "Built-in curve")->check(CLI::IsMember({std::string(kNodalCubic)}));
  app.add_option("--factors", curve_flags.factors, "Pairwise coprime factors f_1 ... f_r as polynomials in t")
      ->allow_extra_args(false);
  app.add_flag("--strict-irreducible", curve_flags.strict_irreducible,
               "Reject factors of degree <= 3 that have a rational root");
  app.add_option("--bound", bound, "Search / sampling bound");
  app.add_option("--out", out_path, "Certificate output path");
  app.add_option("--seed", seed, "Seed for randomized suites and batteries");

  auto* normalize = app.add_subcommand("normalize", "Print the normal form of an operator");
  std::string expr;
  normalize->add_option("expr", expr, "Operator expression, e.g. \"d t\"")->required();

  auto* apply = app.add_subcommand("apply", "Apply an operator to a polynomial");
  std::string poly;
  apply->add_option("expr", expr)->required();
  apply->add_option("poly", poly)->required();

  auto* member = app.add_subcommand("member", "Decide membership in A, D_A or I^n");
  std::vector<std::string> member_args;
  member->add_option("what", member_args, "A EXPR | DA EXPR | ideal N EXPR")->required()->expected(2, 3);

  auto* lemma = app.add_subcommand("lemma", "Check the ideal-stability lemma, part 1, 2 or 3");
  int which = 0;
  std::size_t samples = 500;
  lemma->add_option("part", which)->required()->check(CLI::Range(1, 3));
  lemma->add_option("--samples", samples, "Sample count for part 1");

  auto* refute = app.add_subcommand("refute", "Emit a refutation certificate");
  std::string target;
  refute->add_option("target", target)->required()->check(CLI::IsMember({"locproj", "bialgebroid"}));
  refute->add_flag("--example-operator", example_operator,
                   "Use (t^2-1) d or (t^2-1) d^2 as the witness (nodal cubic only)");

  auto* verify = app.add_subcommand("verify", "Replay a certificate file");
  std::string path;
  verify->add_option("path", path)->required();

  const auto args = expand_factor_lists(raw_args);
  std::vector<const char*> argv{"nodaldiff"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidInput;
  }

  try {
    if (*normalize) {
      out << cmd_normalize(expr) << "\n";
      return kSuccess;
    }
    if (*apply) {
      out << cmd_apply(expr, poly) << "\n";
      return kSuccess;
    }
    if (*verify) {
      const Outcome o = cmd_verify(path);
      (o.exit_code == kSuccess ? out : err) << o.report;
      return o.exit_code;
    }

    const CurveRing curve = resolve_curve(curve_flags);
    for (const auto& w : curve.warnings()) err << "warning: " << w << "\n";

    if (*member) {
      MemberTarget what;
      unsigned power = 1;
      const std::string& kind = member_args.front();
      if (kind == "A" && member_args.size() == 2) {
        what = MemberTarget::A;
      } else if (kind == "DA" && member_args.size() == 2) {
        what = MemberTarget::DA;
      } else if (kind == "ideal" && member_args.size() == 3) {
        what = MemberTarget::IdealPower;
        try {
          power = static_cast<unsigned>(std::stoul(member_args[1]));
        } catch (const std::exception&) {
          err << "ideal power must be a nonnegative integer\n";
          return kInvalidInput;
        }
      } else {
        err << "usage: member (A EXPR | DA EXPR | ideal N EXPR)\n";
        return kInvalidInput;
      }
      const Outcome o = cmd_member(curve, what, power, member_args.back());
      out << o.report;
      return o.exit_code;
    }
    if (*lemma) {
      const Outcome o = cmd_lemma(curve, which, LemmaOptions{seed, samples});
      out << o.report;
      return o.exit_code;
    }
    if (*refute) {
      RefuteOptions options;
      options.seed = seed;
      options.bound = bound;
      options.example_operator = example_operator;
      const RefuteOutcome o = cmd_refute(
          curve, target == "locproj" ? RefuteTarget::LocalProjectivity : RefuteTarget::Bialgebroid,
          options);
      if (o.exit_code != kSuccess) {
        err << o.report;
        return o.exit_code;
      }
      if (out_path) {
        std::ofstream file(*out_path, std::ios::binary | std::ios::trunc);
        file << o.document;
        file.close();
        if (!file) {
          err << "cannot write " << *out_path << "\n";
          return kIoFailure;
        }
        out << o.report << "wrote " << *out_path << "\n";
      } else {
        out << o.document;
      }
      return kSuccess;
    }
  } catch (const std::invalid_argument& e) {
    // ParseError, CurveError, MembershipError
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace nodal::cli
