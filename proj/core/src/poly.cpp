#include "nodal/poly.hpp"

#include "format.hpp"

#include <stdexcept>
#include <vector>

namespace nodal {

Poly::Poly(Rational constant) {
  if (!constant.is_zero()) terms_.emplace(0, std::move(constant));
}

Poly::Poly(Terms terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first < 0) throw std::invalid_argument("negative exponent in polynomial");
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
}

Poly Poly::monomial(int exponent, Rational c) {
  if (exponent < 0) throw std::invalid_argument("negative exponent in polynomial");
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(exponent, std::move(c));
  return p;
}

Poly Poly::from_coefficients(std::initializer_list<std::int64_t> low_to_high) {
  Terms terms;
  int e = 0;
  for (auto c : low_to_high) terms.emplace(e++, Rational(c));
  return Poly(std::move(terms));
}

Rational Poly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return leading_coefficient().inverse() * *this;
}

Poly& Poly::operator+=(const Poly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += -rhs; }

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto [it, inserted] = out.terms_.try_emplace(ea + eb, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Poly operator*(const Rational& c, const Poly& p) {
  if (c.is_zero()) return {};
  Poly out = p;
  for (auto& [e, coeff] : out.terms_) coeff *= c;
  return out;
}

std::string Poly::to_string() const {
  std::vector<std::pair<Rational, std::string>> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    parts.emplace_back(it->second, detail::format_power("t", it->first));
  }
  return detail::format_sum(parts);
}

Poly poly_add(const Poly& p, const Poly& q) { return p + q; }

Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }

DivRem poly_divrem(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  const int dd = d.degree();
  const Rational lead_inv = d.leading_coefficient().inverse();
  DivRem out{Poly(), p};
  while (!out.remainder.is_zero() && out.remainder.degree() >= dd) {
    const int shift = out.remainder.degree() - dd;
    const Poly step = Poly::monomial(shift, out.remainder.leading_coefficient() * lead_inv);
    out.quotient += step;
    out.remainder -= step * d;
  }
  return out;
}

Poly poly_gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  Poly a = p;
  Poly b = q;
  while (!b.is_zero()) {
    Poly r = poly_divrem(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly poly_derivative(const Poly& p) { return poly_derivative(p, 1); }

Poly poly_derivative(const Poly& p, int n) {
  if (n < 0) throw std::invalid_argument("negative derivative order");
  Poly::Terms out;
  for (const auto& [e, c] : p.terms()) {
    if (e < n) continue;
    mpz_class falling = 1;
    for (int k = 0; k < n; ++k) falling *= e - k;
    out.emplace(e - n, c * Rational(falling));
  }
  return Poly(std::move(out));
}

Rational poly_eval(const Poly& p, const Rational& x) {
  // Horner over the sparse representation, highest degree first.
  Rational acc(0);
  int current = p.degree();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    for (; current > it->first; --current) acc *= x;
    acc += it->second;
  }
  for (; current > 0; --current) acc *= x;
  return acc;
}

Poly poly_pow(const Poly& p, unsigned exponent) {
  Poly result(1);
  Poly base = p;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

}  // namespace nodal
