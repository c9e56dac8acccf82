#include "dforge/rat_func.hpp"

#include <ostream>

#include "dforge/errors.hpp"

namespace dforge {

RatFunc::RatFunc(const PolyA& num, const PolyA& den) : num_(num), den_(den) {
  if (den.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = PolyA::constant(num.field(), 1);
    return;
  }
  PolyA g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  if (!den_.is_monic()) {
    const auto li = num.field().inv(den_.lead());
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
}

RatFunc RatFunc::from_canonical(PolyA num, PolyA den) { return RatFunc(std::move(num), std::move(den), true); }

RatFunc RatFunc::operator-() const { return from_canonical(-num_, den_); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in F_q(T)");
  const auto li = field().inv(num_.lead());
  return from_canonical(den_.scaled(li), num_.scaled(li));
}

RatFunc RatFunc::scaled(Value c) const {
  if (c == 0) return zero_like();
  return from_canonical(num_.scaled(c), den_);
}

RatFunc RatFunc::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  // coprimality is preserved by powers
  return from_canonical(dforge::pow(num_, static_cast<std::uint64_t>(e)),
                        dforge::pow(den_, static_cast<std::uint64_t>(e)));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  if (a.den_.is_one()) return RatFunc::from_canonical(a.num_ * b.den_ + b.num_, b.den_);
  if (b.den_.is_one()) return RatFunc::from_canonical(a.num_ + b.num_ * a.den_, a.den_);
  const PolyA g = gcd(a.den_, b.den_);
  if (g.is_one()) return RatFunc::from_canonical(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  const PolyA ad = a.den_ / g, bd = b.den_ / g;
  return RatFunc(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return a.zero_like();
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc::from_canonical(a.num_ * b.num_, a.den_);
  // cross-cancel so the product is already reduced
  const PolyA g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  PolyA n = (g1.is_one() ? a.num_ : a.num_ / g1) * (g2.is_one() ? b.num_ : b.num_ / g2);
  PolyA d = (g2.is_one() ? a.den_ : a.den_ / g2) * (g1.is_one() ? b.den_ : b.den_ / g1);
  if (!d.is_monic()) {
    const auto li = a.field().inv(d.lead());
    n = n.scaled(li);
    d = d.scaled(li);
  }
  return RatFunc::from_canonical(std::move(n), std::move(d));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::random(const FqField& field, Rng& rng, int max_num_degree, int max_den_degree) {
  PolyA n = PolyA::random(field, rng, max_num_degree);
  PolyA d(field);
  while (d.is_zero()) d = PolyA::random(field, rng, max_den_degree);
  return RatFunc(n, d);
}

std::ostream& operator<<(std::ostream& os, const RatFunc& a) {
  if (a.den().is_one()) return os << a.num();
  return os << '(' << a.num() << ")/(" << a.den() << ')';
}

}  // namespace dforge
