#include "nodal/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace nodal {

namespace {

bool is_digit_run(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digit_run(num_text) || !is_digit_run(den_text)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return Rational(mpq_class(num, den));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1) / value_);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::to_fraction_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_string() const {
  return is_integer() ? value_.get_num().get_str() : value_.get_str();
}

}  // namespace nodal
