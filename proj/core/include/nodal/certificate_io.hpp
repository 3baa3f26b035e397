#pragma once

#include "nodal/certificate.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace nodal {

/// Malformed or truncated certificate document.
class CertificateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON document, schema "1". Rationals are "p/q" strings, polynomials
/// {"degree": "p/q"} maps, operators {"i,j": "p/q"} maps. Keys are sorted,
/// so equal certificates serialize to equal bytes.
std::string serialize_certificate(const Certificate& certificate);

/// Inverse of serialize_certificate. The stored hash lands in recorded_hash.
Certificate parse_certificate(std::string_view document);

/// FNV-1a 64 over the canonical serialization with "created" and the hash
/// itself removed, as 16 hex digits.
std::string replay_hash(const Certificate& certificate);

}  // namespace nodal
