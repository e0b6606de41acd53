#pragma once

#include <string_view>

#include "germs/polynomial.hpp"

namespace germs {

/// Parses text such as "3/2*x^2*y - y + 1" over `ring`. Supports + - * ^,
/// parentheses and rational literals; errors carry a 1-based column.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

}  // namespace germs
