#pragma once

#include "nodal/curve.hpp"
#include "nodal/poly.hpp"
#include "nodal/weyl.hpp"

#include <cstdint>
#include <random>

namespace nodal {

/// Seeded generator of random algebraic data. Draws come straight from the
/// mt19937_64 output sequence (fixed by the standard), never from the
/// implementation-defined std distributions, so a seed yields the same
/// samples on every platform.
class SampleSource {
 public:
  explicit SampleSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant at these sizes.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }

  /// Numerator in [-5, 5], denominator in [1, 3].
  Rational small_rational();
  Rational nonzero_rational();
  /// Random polynomial of degree <= max_degree with roughly half the
  /// coefficients zero.
  Poly poly(int max_degree);
  /// Random operator with t-degree <= max_degree and order <= max_order.
  WeylOp op(int max_degree, int max_order);

  /// f^power * h with deg h <= max_degree.
  Poly ideal_element(const CurveRing& curve, unsigned power, int max_degree);
  /// lambda + f h with deg h <= max_degree.
  Poly a_element(const CurveRing& curve, int max_degree);
  /// lambda + f D' for random D'. With zero_lambda the result maps A into I.
  WeylOp da_element(const CurveRing& curve, int max_degree, int max_order, bool zero_lambda = false);

 private:
  std::mt19937_64 engine_;
};

}  // namespace nodal
