#include "nodal/sampling.hpp"

namespace nodal {

std::int64_t SampleSource::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational SampleSource::small_rational() {
  const auto num = uniform(-5, 5);
  const auto den = uniform(1, 3);
  return Rational(num, den);
}

Rational SampleSource::nonzero_rational() {
  Rational r = small_rational();
  while (r.is_zero()) r = small_rational();
  return r;
}

Poly SampleSource::poly(int max_degree) {
  Poly::Terms terms;
  const auto degree = uniform(0, max_degree);
  for (int e = 0; e <= degree; ++e) {
    if (coin()) terms.emplace(e, small_rational());
  }
  return Poly(std::move(terms));
}

WeylOp SampleSource::op(int max_degree, int max_order) {
  WeylOp::Terms terms;
  const auto order = uniform(0, max_order);
  for (int j = 0; j <= order; ++j) {
    const auto degree = uniform(0, max_degree);
    for (int i = 0; i <= degree; ++i) {
      if (coin()) terms.emplace(Monomial{i, j}, small_rational());
    }
  }
  return WeylOp(std::move(terms));
}

Poly SampleSource::ideal_element(const CurveRing& curve, unsigned power, int max_degree) {
  return curve.f_power(power) * poly(max_degree);
}

Poly SampleSource::a_element(const CurveRing& curve, int max_degree) {
  return Poly(small_rational()) + ideal_element(curve, 1, max_degree);
}

WeylOp SampleSource::da_element(const CurveRing& curve, int max_degree, int max_order,
                                bool zero_lambda) {
  const Rational lambda = zero_lambda ? Rational(0) : small_rational();
  return WeylOp(lambda) + weyl_mul(from_poly(curve.f()), op(max_degree, max_order));
}

}  // namespace nodal
