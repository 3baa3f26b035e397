#pragma once

#include "nodal/rational.hpp"
#include "nodal/weyl.hpp"

#include <vector>

namespace nodal {

enum class Generator : unsigned char { T, D };

/// A scalar times a word in the free algebra on {t, d}, before the relation
/// dt = td + 1 is imposed.
struct GeneratorWord {
  Rational scalar{1};
  std::vector<Generator> letters;

  /// Word from a string over {'t', 'd'}; other characters are rejected.
  static GeneratorWord parse(std::string_view letters, Rational scalar = Rational(1));
};

/// Normal form of a single word by exhaustive leftmost rewriting of
/// dt -> td + 1. Each step removes one (d, t) inversion, so it terminates.
/// Shares no code with weyl_mul; it is the reference that weyl_mul is
/// checked against.
WeylOp rewrite_to_normal_form(const GeneratorWord& word);

/// Normal form of the product w1 * w2 computed by rewriting the
/// concatenated word.
WeylOp weyl_mul_oracle(const GeneratorWord& lhs, const GeneratorWord& rhs);

}  // namespace nodal
