#pragma once

#include <sstream>
#include <string>
#include <string_view>

#include "dforge/ideal.hpp"
#include "dforge/skew_poly.hpp"

namespace dforge {

// Expressions over integers (reduced into F_p), F_q coordinate lists
// "[i0,i1,...]", the symbols T, x (generator of K) and t (τ), with + - * /
// ^ and parentheses. Products involving t follow τc = c^q τ; a / b needs b
// to be a nonzero element of K. Exponents are nonnegative decimal integers.
// Malformed input raises ParseError with the offset of the offending token.

FqField::Value parse_fq(const FqFieldPtr& F, std::string_view text);
PolyA parse_poly(const FqFieldPtr& F, std::string_view text);
RatFunc parse_rat(const FqFieldPtr& F, std::string_view text);
/// Accepts "(g)" or "g"; the ideal generated by g.
IdealA parse_ideal(const FqFieldPtr& F, std::string_view text);
ExtElem parse_ext(const ExtField& K, std::string_view text);
SkewPoly parse_skew(const ExtField& K, std::string_view text);

template <class V>
std::string to_text(const V& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace dforge
