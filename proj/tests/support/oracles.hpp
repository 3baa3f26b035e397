#pragma once

// Test-only reference computations. None of these call into the code paths
// they are used to check.

#include "nodal/poly.hpp"
#include "nodal/rational.hpp"

#include <vector>

namespace nodal::testing {

/// Dense coefficient vector, lowest degree first, trailing zeros trimmed.
inline std::vector<Rational> dense(const Poly& p) {
  std::vector<Rational> out(p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()) + 1, Rational(0));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e)] = c;
  return out;
}

/// Schoolbook convolution on dense vectors.
inline std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

/// Evaluation by summing c x^e term by term with explicit powers.
inline Rational eval_by_powers(const Poly& p, const Rational& x) {
  Rational sum(0);
  for (const auto& [e, c] : p.terms()) {
    Rational power(1);
    for (int k = 0; k < e; ++k) power *= x;
    sum += c * power;
  }
  return sum;
}

}  // namespace nodal::testing
