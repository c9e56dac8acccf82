#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "dforge/fq.hpp"

namespace dforge {

/// An element of A = F_q[T], little-endian, with no trailing zero coefficient.
/// The zero polynomial has degree -1.
class PolyA {
 public:
  using Value = FqField::Value;

  explicit PolyA(const FqField& field) : field_(&field) {}
  PolyA(const FqField& field, std::vector<Value> coeffs);

  static PolyA constant(const FqField& field, Value c);
  static PolyA monomial(const FqField& field, Value c, std::size_t k);
  static PolyA T(const FqField& field) { return monomial(field, 1, 1); }

  const FqField& field() const noexcept { return *field_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  Value lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  Value coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Value>& coeffs() const noexcept { return c_; }

  PolyA operator-() const;
  PolyA& operator+=(const PolyA& b);
  PolyA& operator-=(const PolyA& b);
  PolyA& operator*=(const PolyA& b) { return *this = *this * b; }
  friend PolyA operator+(PolyA a, const PolyA& b) { return a += b; }
  friend PolyA operator-(PolyA a, const PolyA& b) { return a -= b; }
  friend PolyA operator*(const PolyA& a, const PolyA& b);
  PolyA scaled(Value c) const;
  PolyA shifted(std::size_t k) const;  // times T^k

  Value eval(Value x) const noexcept;
  PolyA derivative() const;
  /// a(T)^q = a(T^q), since coefficients lie in F_q.
  PolyA frobenius() const;
  PolyA monic() const;

  friend bool operator==(const PolyA& a, const PolyA& b) noexcept {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  /// Total order by degree, then coefficients from the top. Used for canonical sorting.
  friend bool operator<(const PolyA& a, const PolyA& b) noexcept;

  PolyA random_like(Rng& rng, int max_degree) const { return random(*field_, rng, max_degree); }
  static PolyA random(const FqField& field, Rng& rng, int max_degree);
  static PolyA random_monic(const FqField& field, Rng& rng, int degree);

 private:
  void trim() noexcept;

  const FqField* field_;
  std::vector<Value> c_;
};

struct PolyDivMod {
  PolyA quot;
  PolyA rem;
};

/// a = quot*b + rem with deg rem < deg b. Throws DivisionByZero when b = 0.
PolyDivMod divmod(const PolyA& a, const PolyA& b);
PolyA operator/(const PolyA& a, const PolyA& b);
PolyA operator%(const PolyA& a, const PolyA& b);
bool divides(const PolyA& d, const PolyA& a);

/// Monic gcd; gcd(0, 0) = 0.
PolyA gcd(const PolyA& a, const PolyA& b);

struct PolyXgcd {
  PolyA g;  // monic
  PolyA s;
  PolyA t;  // s*a + t*b = g
};
PolyXgcd xgcd(const PolyA& a, const PolyA& b);

PolyA pow(const PolyA& a, std::uint64_t e);
PolyA powmod(const PolyA& a, std::uint64_t e, const PolyA& m);
PolyA mulmod(const PolyA& a, const PolyA& b, const PolyA& m);
/// Inverse of a modulo m; throws DivisionByZero when gcd(a, m) != 1.
PolyA invmod(const PolyA& a, const PolyA& m);
/// T^(q^k) mod m by k-fold Frobenius iteration.
PolyA frobenius_power_mod(std::size_t k, const PolyA& m);

std::ostream& operator<<(std::ostream& os, const PolyA& a);

}  // namespace dforge
