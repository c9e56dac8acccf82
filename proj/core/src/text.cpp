#include "dforge/text.hpp"

#include <cctype>
#include <optional>

#include "dforge/errors.hpp"

namespace dforge {

namespace {

constexpr std::uint64_t kMaxExponent = 1u << 16;
constexpr unsigned kMaxDepth = 200;

struct Symbols {
  bool T = true, x = false, t = false;
};

class Parser {
 public:
  Parser(const ExtField& K, std::string_view text, Symbols allowed) : K_(K), s_(text), allowed_(allowed) {}

  SkewPoly parse() {
    SkewPoly v = expr();
    skip_space();
    if (pos_ < s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const { throw ParseError(pos_, what); }
  [[noreturn]] void error_at(std::size_t at, const std::string& what) const { throw ParseError(at, what); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  SkewPoly constant(const ExtElem& c) const { return SkewPoly::constant(c); }

  SkewPoly expr() {
    SkewPoly v = term();
    for (;;) {
      if (accept('+')) v = v + term();
      else if (accept('-')) v = v - term();
      else return v;
    }
  }

  SkewPoly term() {
    SkewPoly v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        skip_space();
        const std::size_t at = pos_;
        const SkewPoly d = unary();
        if (d.is_zero()) error_at(at, "division by zero");
        if (!d.is_constant()) error_at(at, "division by an element involving t");
        v = v.right_scaled(d.coeff(0).inverse());
      } else {
        return v;
      }
    }
  }

  SkewPoly unary() {
    bool negate = false;
    for (;;) {
      if (accept('-')) negate = !negate;
      else if (!accept('+')) break;
    }
    return negate ? -power() : power();
  }

  SkewPoly power() {
    SkewPoly base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    const auto e = integer();
    if (!e) error_at(at, "expected a nonnegative integer exponent");
    if (*e > kMaxExponent) error_at(at, "exponent too large");
    SkewPoly r = constant(K_.one());
    SkewPoly b = base;
    // square-and-multiply; powers of one element commute
    for (std::uint64_t k = *e; k; k >>= 1) {
      if (k & 1) r = r * b;
      if (k > 1) b = b * b;
    }
    return r;
  }

  std::optional<std::uint64_t> integer() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) return std::nullopt;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + std::uint64_t(s_[pos_] - '0');
      if (v > (std::uint64_t(1) << 40)) error("integer too large");
      ++pos_;
    }
    return v;
  }

  SkewPoly atom() {
    skip_space();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const std::size_t at = pos_;
    const char c = s_[pos_];
    const FqField& F = K_.fq();
    if (c == '(') {
      if (++depth_ > kMaxDepth) error("nesting too deep");
      ++pos_;
      SkewPoly v = expr();
      expect(')');
      --depth_;
      return v;
    }
    if (c == '[') {
      ++pos_;
      std::vector<std::uint32_t> coords;
      if (!accept(']')) {
        do {
          skip_space();
          const auto v = integer();
          if (!v) error("expected an F_p coordinate");
          if (*v >= F.characteristic()) error_at(at, "coordinate is not reduced mod p");
          coords.push_back(std::uint32_t(*v));
        } while (accept(','));
        expect(']');
      }
      if (coords.size() > F.degree()) error_at(at, "too many F_q coordinates");
      return constant(K_.from_fq(F.from_coords(coords)));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = *integer();
      return constant(K_.from_fq(F.from_int(std::int64_t(v % F.characteristic()))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
        error_at(at, "unknown symbol");
      if (c == 'T' && allowed_.T) return constant(K_.T());
      if (c == 'x' && allowed_.x) return constant(K_.gen());
      if (c == 't' && allowed_.t) return SkewPoly::tau(K_);
      error_at(at, std::string("symbol '") + c + "' is not allowed here");
    }
    error_at(at, "unexpected '" + std::string(1, c) + "'");
  }

  const ExtField& K_;
  std::string_view s_;
  Symbols allowed_;
  std::size_t pos_ = 0;
  unsigned depth_ = 0;
};

ExtElem parse_scalar(const ExtField& K, std::string_view text, Symbols allowed) {
  const SkewPoly v = Parser(K, text, allowed).parse();
  return v.coeff(0);
}

RatFunc rational_part(const FqFieldPtr& F, std::string_view text) {
  const auto Q = ExtField::rational(F);
  return parse_scalar(*Q, text, {}).coord(0);
}

}  // namespace

FqField::Value parse_fq(const FqFieldPtr& F, std::string_view text) {
  const auto Q = ExtField::rational(F);
  const ExtElem v = parse_scalar(*Q, text, {false, false, false});
  return v.fq_value();
}

PolyA parse_poly(const FqFieldPtr& F, std::string_view text) {
  const RatFunc r = rational_part(F, text);
  if (!r.is_polynomial()) throw ParseError(0, "not a polynomial in T");
  return r.num();
}

RatFunc parse_rat(const FqFieldPtr& F, std::string_view text) { return rational_part(F, text); }

IdealA parse_ideal(const FqFieldPtr& F, std::string_view text) {
  const PolyA g = parse_poly(F, text);
  if (g.is_zero()) throw ParseError(0, "the zero ideal is not allowed");
  return IdealA(g);
}

ExtElem parse_ext(const ExtField& K, std::string_view text) { return parse_scalar(K, text, {true, true, false}); }

SkewPoly parse_skew(const ExtField& K, std::string_view text) { return Parser(K, text, {true, true, true}).parse(); }

}  // namespace dforge
