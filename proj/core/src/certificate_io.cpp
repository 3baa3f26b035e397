#include "nodal/certificate_io.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <cstdio>

namespace nodal {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw CertificateFormatError(what); }

unsigned parse_index(std::string_view text, const char* what) {
  unsigned value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    fail(std::string("bad ") + what + " key '" + std::string(text) + "'");
  }
  return value;
}

Rational rational_from(const json& j) {
  if (!j.is_string()) fail("rational must be a \"p/q\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(e.what());
  }
}

json to_json(const Poly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c.to_fraction_string();
  return out;
}

Poly poly_from(const json& j) {
  if (!j.is_object()) fail("polynomial must be an object");
  Poly::Terms terms;
  for (const auto& [key, value] : j.items()) {
    terms.emplace(static_cast<int>(parse_index(key, "degree")), rational_from(value));
  }
  return Poly(std::move(terms));
}

json to_json(const WeylOp& op) {
  json out = json::object();
  for (const auto& [m, c] : op.terms()) {
    out[std::to_string(m.t) + "," + std::to_string(m.d)] = c.to_fraction_string();
  }
  return out;
}

WeylOp op_from(const json& j) {
  if (!j.is_object()) fail("operator must be an object");
  WeylOp::Terms terms;
  for (const auto& [key, value] : j.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) fail("operator key must be \"i,j\", got '" + key + "'");
    const std::string_view view(key);
    const Monomial m{static_cast<int>(parse_index(view.substr(0, comma), "t-exponent")),
                     static_cast<int>(parse_index(view.substr(comma + 1), "d-exponent"))};
    terms.emplace(m, rational_from(value));
  }
  return WeylOp(std::move(terms));
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

unsigned unsigned_from(const json& j, const char* what) {
  if (!j.is_number_unsigned()) fail(std::string(what) + " must be a nonnegative integer");
  return j.get<unsigned>();
}

std::string string_from(const json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

json array_of(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  return j;
}

json to_json(const Bound& b) {
  switch (b.kind) {
    case Bound::Kind::ExactStructural: return {{"kind", "exact_structural"}};
    case Bound::Kind::ExactWitness: return {{"kind", "exact_witness"}};
    case Bound::Kind::Bounded: return {{"kind", "bounded"}, {"limit", b.limit}};
  }
  return {};
}

Bound bound_from(const json& j) {
  const std::string kind = string_from(field(j, "kind"), "bound kind");
  if (kind == "exact_structural") return {Bound::Kind::ExactStructural, 0};
  if (kind == "exact_witness") return {Bound::Kind::ExactWitness, 0};
  if (kind == "bounded") return {Bound::Kind::Bounded, unsigned_from(field(j, "limit"), "bound limit")};
  fail("unknown bound kind '" + kind + "'");
}

json decomposition_json(const Decomposition& dec) {
  json out = json::array();
  for (const auto& term : dec) out.push_back({{"a", to_json(term.a)}, {"operator", to_json(term.op)}});
  return out;
}

json tensor_json(const TensorRepresentative& rep) {
  json out = json::array();
  for (const auto& term : rep) out.push_back({{"left", to_json(term.left)}, {"right", to_json(term.right)}});
  return out;
}

struct PayloadWriter {
  json operator()(const std::monostate&) const { return nullptr; }
  json operator()(const PolyEvidence& e) const {
    return {{"type", "poly_evidence"}, {"value", to_json(e.value)}};
  }
  json operator()(const PsiBattery& b) const {
    json decs = json::array();
    for (const auto& dec : b.decompositions) decs.push_back(decomposition_json(dec));
    return {{"type", "psi_battery"}, {"sample_bound", b.sample_bound}, {"decompositions", decs}};
  }
  json operator()(const MuUpperRecord& r) const {
    return {{"type", "mu_upper_hit"},   {"m_a", r.m_a}, {"m_b", r.m_b},
            {"search_bound", r.search_bound}, {"value", to_json(r.value)}};
  }
  json operator()(const MuLowerBattery& b) const {
    json samples = json::array();
    for (const auto& s : b.samples) {
      samples.push_back({{"pairs", tensor_json(s.pairs)}, {"a", to_json(s.a)}, {"b", to_json(s.b)}});
    }
    return {{"type", "mu_lower_battery"}, {"samples", samples}};
  }
};

CheckPayload payload_from(const json& j) {
  if (j.is_null()) return std::monostate{};
  const std::string type = string_from(field(j, "type"), "data type");
  if (type == "poly_evidence") return PolyEvidence{poly_from(field(j, "value"))};
  if (type == "psi_battery") {
    PsiBattery b;
    b.sample_bound = unsigned_from(field(j, "sample_bound"), "sample_bound");
    for (const auto& dec_json : array_of(field(j, "decompositions"), "decompositions")) {
      Decomposition dec;
      for (const auto& term : array_of(dec_json, "decomposition")) {
        dec.push_back({poly_from(field(term, "a")), op_from(field(term, "operator"))});
      }
      b.decompositions.push_back(std::move(dec));
    }
    return b;
  }
  if (type == "mu_upper_hit") {
    return MuUpperRecord{unsigned_from(field(j, "m_a"), "m_a"), unsigned_from(field(j, "m_b"), "m_b"),
                         unsigned_from(field(j, "search_bound"), "search_bound"),
                         poly_from(field(j, "value"))};
  }
  if (type == "mu_lower_battery") {
    MuLowerBattery b;
    for (const auto& s : array_of(field(j, "samples"), "samples")) {
      MuLowerSample sample;
      for (const auto& pair : array_of(field(s, "pairs"), "pairs")) {
        sample.pairs.push_back({op_from(field(pair, "left")), op_from(field(pair, "right"))});
      }
      sample.a = poly_from(field(s, "a"));
      sample.b = poly_from(field(s, "b"));
      b.samples.push_back(std::move(sample));
    }
    return b;
  }
  fail("unknown data type '" + type + "'");
}

json hashed_body(const Certificate& c) {
  json factors = json::array();
  for (const auto& p : c.factors) factors.push_back(to_json(p));
  json checks = json::array();
  for (const auto& check : c.checks) {
    checks.push_back({{"id", std::string(to_string(check.kind))},
                      {"description", check.description},
                      {"verdict", check.verdict},
                      {"bound", to_json(check.bound)},
                      {"data", std::visit(PayloadWriter{}, check.payload)}});
  }
  return {
      {"schema_version", c.schema_version},
      {"tool_version", c.tool_version},
      {"claim", std::string(to_string(c.claim))},
      {"curve", {{"factors", factors}, {"f", to_json(c.f)}}},
      {"witness",
       {{"operator", to_json(c.witness.op)},
        {"polynomial", to_json(c.witness.witness)},
        {"source_power", c.witness.source_power},
        {"target_power", c.witness.target_power}}},
      {"checks", checks},
  };
}

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::string replay_hash(const Certificate& certificate) {
  return fnv1a64(hashed_body(certificate).dump());
}

std::string serialize_certificate(const Certificate& certificate) {
  json doc = hashed_body(certificate);
  doc["created"] = certificate.created;
  doc["replay_hash"] = replay_hash(certificate);
  return doc.dump(2) + "\n";
}

Certificate parse_certificate(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    fail(std::string("not a JSON document: ") + e.what());
  }
  if (!doc.is_object()) fail("certificate must be a JSON object");

  Certificate c;
  c.schema_version = string_from(field(doc, "schema_version"), "schema_version");
  if (c.schema_version != kCertificateSchemaVersion) {
    fail("unsupported schema version '" + c.schema_version + "'");
  }
  c.tool_version = string_from(field(doc, "tool_version"), "tool_version");
  c.created = doc.contains("created") ? string_from(doc.at("created"), "created") : std::string();
  const auto claim = claim_from_string(string_from(field(doc, "claim"), "claim"));
  if (!claim) fail("unknown claim");
  c.claim = *claim;

  const json& curve = field(doc, "curve");
  for (const auto& p : array_of(field(curve, "factors"), "factors")) c.factors.push_back(poly_from(p));
  c.f = poly_from(field(curve, "f"));

  const json& witness = field(doc, "witness");
  c.witness.op = op_from(field(witness, "operator"));
  c.witness.witness = poly_from(field(witness, "polynomial"));
  c.witness.source_power = unsigned_from(field(witness, "source_power"), "source_power");
  c.witness.target_power = unsigned_from(field(witness, "target_power"), "target_power");

  for (const auto& check : array_of(field(doc, "checks"), "checks")) {
    CheckRecord rec;
    const auto kind = check_kind_from_string(string_from(field(check, "id"), "check id"));
    if (!kind) fail("unknown check id");
    rec.kind = *kind;
    rec.description = string_from(field(check, "description"), "description");
    const json& verdict = field(check, "verdict");
    if (!verdict.is_boolean()) fail("verdict must be a boolean");
    rec.verdict = verdict.get<bool>();
    rec.bound = bound_from(field(check, "bound"));
    rec.payload = payload_from(field(check, "data"));
    c.checks.push_back(std::move(rec));
  }
  c.recorded_hash = doc.contains("replay_hash") ? string_from(doc.at("replay_hash"), "replay_hash")
                                                : std::string();
  return c;
}

}  // namespace nodal
