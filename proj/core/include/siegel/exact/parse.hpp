#pragma once

#include <string>

#include "siegel/exact/ratfunc.hpp"

namespace siegel {

// Grammar: sums/differences of products/quotients of powers (integer exponents) of
// rationals, the imaginary unit i, registry symbols and parenthesized expressions.
RatFunc parse_ratfunc(const std::string& text, RegPtr reg = Registry::standard());
Poly parse_poly(const std::string& text, RegPtr reg = Registry::standard());

// shorthand used throughout the engine
inline Poly P(const std::string& text) { return parse_poly(text); }

}  // namespace siegel
