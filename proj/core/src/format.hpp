#pragma once

#include "nodal/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nodal::detail {

/// Joins (coefficient, monomial) pairs into "c1 m1 + c2 m2 - ...". An empty
/// monomial denotes the constant term. Unit coefficients are elided.
std::string format_sum(const std::vector<std::pair<Rational, std::string>>& terms);

/// "sym^e", "sym", or "" for e == 0.
std::string format_power(const char* symbol, int exponent);

}  // namespace nodal::detail
