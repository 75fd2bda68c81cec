#pragma once

#include "liexp/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace liexp {

/// Parses a polynomial expression: sums of rational-coefficient monomials,
/// e.g. "-v1_1*x1 + 1/2*v1_1^2*t - 3*t^2". Identifiers must come from
/// `variables` or be a key of `aliases` (which maps shorthand names onto
/// declared ones). Throws std::invalid_argument with a position on bad input.
MultiPoly parse_poly(const std::string& src, const std::vector<std::string>& variables,
                     const std::map<std::string, std::string>& aliases = {});

} // namespace liexp
