#include "nodal/weyl.hpp"

#include "format.hpp"

#include <algorithm>
#include <stdexcept>

namespace nodal {

namespace {

void accumulate(WeylOp::Terms& terms, const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

WeylOp::WeylOp(Rational scalar) {
  if (!scalar.is_zero()) terms_.emplace(Monomial{0, 0}, std::move(scalar));
}

WeylOp::WeylOp(Terms terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.t < 0 || it->first.d < 0) {
      throw std::invalid_argument("negative exponent in Weyl monomial");
    }
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
}

WeylOp WeylOp::term(int t_exp, int d_exp, Rational c) {
  Terms terms;
  terms.emplace(Monomial{t_exp, d_exp}, std::move(c));
  return WeylOp(std::move(terms));
}

Rational WeylOp::coefficient(int t_exp, int d_exp) const {
  auto it = terms_.find(Monomial{t_exp, d_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::map<int, Poly> WeylOp::coefficient_polys() const {
  std::map<int, Poly::Terms> grouped;
  for (const auto& [m, c] : terms_) grouped[m.d].emplace(m.t, c);
  std::map<int, Poly> out;
  for (auto& [j, terms] : grouped) out.emplace(j, Poly(std::move(terms)));
  return out;
}

WeylOp WeylOp::from_coefficient_polys(const std::map<int, Poly>& by_order) {
  Terms terms;
  for (const auto& [j, p] : by_order) {
    for (const auto& [i, c] : p.terms()) terms.emplace(Monomial{i, j}, c);
  }
  return WeylOp(std::move(terms));
}

WeylOp& WeylOp::operator+=(const WeylOp& rhs) {
  for (const auto& [m, c] : rhs.terms_) accumulate(terms_, m, c);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& rhs) {
  for (const auto& [m, c] : rhs.terms_) accumulate(terms_, m, -c);
  return *this;
}

WeylOp WeylOp::operator-() const {
  WeylOp out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

WeylOp operator*(const WeylOp& a, const WeylOp& b) { return weyl_mul(a, b); }

WeylOp operator*(const Rational& c, const WeylOp& op) {
  if (c.is_zero()) return {};
  WeylOp out = op;
  for (auto& [m, coeff] : out.terms_) coeff *= c;
  return out;
}

std::string WeylOp::to_string() const {
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    if (x.first.d != y.first.d) return x.first.d > y.first.d;
    return x.first.t > y.first.t;
  });
  std::vector<std::pair<Rational, std::string>> parts;
  parts.reserve(ordered.size());
  for (const auto& [m, c] : ordered) {
    std::string mono = detail::format_power("t", m.t);
    const std::string dpart = detail::format_power("d", m.d);
    if (!dpart.empty()) mono += mono.empty() ? dpart : " " + dpart;
    parts.emplace_back(c, std::move(mono));
  }
  return detail::format_sum(parts);
}

WeylOp weyl_mul(const WeylOp& lhs, const WeylOp& rhs) {
  WeylOp::Terms out;
  for (const auto& [left, cl] : lhs.terms()) {
    for (const auto& [right, cr] : rhs.terms()) {
      // t^a d^b * t^c d^e: move d^b past t^c.
      const int b = left.d;
      const int c = right.t;
      const Rational base = cl * cr;
      mpz_class binom = 1;    // C(b, s)
      mpz_class falling = 1;  // c (c-1) ... (c-s+1)
      for (int s = 0; s <= std::min(b, c); ++s) {
        if (s > 0) {
          binom = binom * (b - s + 1) / s;
          falling *= c - s + 1;
        }
        accumulate(out, Monomial{left.t + c - s, b + right.d - s},
                   base * Rational(mpz_class(binom * falling)));
      }
    }
  }
  return WeylOp(std::move(out));
}

Poly weyl_apply(const WeylOp& op, const Poly& p) {
  Poly out;
  for (const auto& [j, coeff] : op.coefficient_polys()) {
    out += coeff * poly_derivative(p, j);
  }
  return out;
}

WeylOp weyl_commutator(const WeylOp& lhs, const WeylOp& rhs) {
  return weyl_mul(lhs, rhs) - weyl_mul(rhs, lhs);
}

int op_order(const WeylOp& op) {
  int order = kMinusInfinity;
  for (const auto& [m, c] : op.terms()) order = std::max(order, m.d);
  return order;
}

WeylOp from_poly(const Poly& p) {
  WeylOp::Terms terms;
  for (const auto& [i, c] : p.terms()) terms.emplace(Monomial{i, 0}, c);
  return WeylOp(std::move(terms));
}

Poly to_poly(const WeylOp& op) {
  if (op_order(op) > 0) throw std::invalid_argument("operator involves d: " + op.to_string());
  Poly::Terms terms;
  for (const auto& [m, c] : op.terms()) terms.emplace(m.t, c);
  return Poly(std::move(terms));
}

}  // namespace nodal
