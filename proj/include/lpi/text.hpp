#pragma once

#include <string>

#include "lpi/birat.hpp"
#include "lpi/series.hpp"

namespace lpi {

// Canonical text: expanded monomials, terms ascending by (x-degree,
// q-degree), e.g. "1 + x*q^4 + x*q^6". Zero prints as "0". Fractions print
// as "(num)/(den)" unless the denominator is 1.
std::string to_string(const PolyQ& p);
std::string to_string(const BiPoly& p, const std::string& xvar = "x");
std::string to_string(const RationalQ& r);
std::string to_string(const BiRat& r, const std::string& xvar = "x");
// coefficient list "[c0, c1, ...]"
std::string to_string(const SeriesQ& s);

// Parses +, -, *, /, ^ (integer exponents, negative allowed), parentheses,
// integers and the variables q and x (S is accepted as a synonym for x).
BiRat parse_birat(const std::string& text);
BiPoly parse_bipoly(const std::string& text);
RationalQ parse_ratq(const std::string& text);
PolyQ parse_polyq(const std::string& text);

} // namespace lpi
