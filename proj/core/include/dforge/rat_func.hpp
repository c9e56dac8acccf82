#pragma once

#include <cstdint>
#include <iosfwd>

#include "dforge/poly_a.hpp"

namespace dforge {

/// An element of Q = F_q(T) in canonical form: gcd(num, den) = 1 and den monic.
/// Zero is 0/1.
class RatFunc {
 public:
  using Value = FqField::Value;

  explicit RatFunc(const FqField& field) : num_(field), den_(PolyA::constant(field, 1)) {}
  explicit RatFunc(const PolyA& num) : num_(num), den_(PolyA::constant(num.field(), 1)) {}
  /// Throws DivisionByZero when den = 0.
  RatFunc(const PolyA& num, const PolyA& den);

  static RatFunc constant(const FqField& field, Value c) { return RatFunc(PolyA::constant(field, c)); }
  static RatFunc T(const FqField& field) { return RatFunc(PolyA::T(field)); }

  const FqField& field() const noexcept { return num_.field(); }
  const PolyA& num() const noexcept { return num_; }
  const PolyA& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }
  /// True when the value lies in F_q.
  bool is_constant() const noexcept { return den_.is_one() && num_.degree() <= 0; }
  /// The F_q value; only meaningful when is_constant().
  Value constant_value() const noexcept { return num_.coeff(0); }

  RatFunc zero_like() const { return RatFunc(field()); }
  RatFunc one_like() const { return constant(field(), 1); }

  RatFunc operator-() const;
  RatFunc inverse() const;
  /// x -> x^q, which is the substitution T -> T^q.
  RatFunc frobenius() const { return from_canonical(num_.frobenius(), den_.frobenius()); }
  RatFunc scaled(Value c) const;
  RatFunc pow(std::int64_t e) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const RatFunc& a, const RatFunc& b) noexcept {
    if (!(a.num_ == b.num_)) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  static RatFunc random(const FqField& field, Rng& rng, int max_num_degree, int max_den_degree);

 private:
  // Trusted constructor: inputs already coprime with monic denominator.
  static RatFunc from_canonical(PolyA num, PolyA den);
  RatFunc(PolyA num, PolyA den, bool) : num_(std::move(num)), den_(std::move(den)) {}

  PolyA num_;
  PolyA den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& a);

}  // namespace dforge
