#pragma once

#include "poly.hpp"

namespace hensel {

// Polynomial expression grammar: integer literals, declared variable names,
// + - * ^ and parentheses; the series backend additionally accepts `t`
// inside coefficients. Diagnostics carry line and column.
MultiPoly parse_poly(const std::string& text, const RingPtr& ring, const VarsPtr& vars, int line_offset = 0);

// Constant expression (integers; t-polynomials for the series backend).
Scalar parse_scalar(const std::string& text, const RingPtr& ring, int line_offset = 0);

// Comma-separated constants, each at full cap precision.
std::vector<Elem> parse_element_vector(const std::string& text, const RingPtr& ring);
std::vector<Scalar> parse_scalar_vector(const std::string& text, const RingPtr& ring, int line_offset = 0);

} // namespace hensel
