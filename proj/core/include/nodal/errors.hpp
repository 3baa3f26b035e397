#pragma once

#include <stdexcept>
#include <string>

namespace nodal {

/// Invalid curve datum: too few factors, constant or non-coprime factors,
/// or a reducible factor in strict mode.
class CurveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation required membership in D_A (or A) and the input was not.
class MembershipError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bounded witness search found nothing.
class BoundExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nodal
