#include "format.hpp"

namespace nodal::detail {

std::string format_power(const char* symbol, int exponent) {
  if (exponent == 0) return {};
  if (exponent == 1) return symbol;
  return std::string(symbol) + "^" + std::to_string(exponent);
}

std::string format_sum(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [coeff, mono] : terms) {
    const bool negative = coeff.sign() < 0;
    const Rational magnitude = negative ? -coeff : coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += magnitude.to_string();
    } else if (magnitude.is_one()) {
      out += mono;
    } else {
      out += magnitude.to_string() + " " + mono;
    }
  }
  return out;
}

}  // namespace nodal::detail
