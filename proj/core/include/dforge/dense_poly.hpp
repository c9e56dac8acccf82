#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dforge/errors.hpp"

namespace dforge {

/// Dense univariate polynomials over a field whose elements are value types.
///
/// E must provide + - * /, unary -, is_zero(), is_one(), zero_like(),
/// one_like() and ==. Every polynomial carries a zero element of its field so
/// that empty polynomials still know where they live.
template <class E>
class DensePoly {
 public:
  explicit DensePoly(E zero) : zero_(std::move(zero)) {}
  DensePoly(E zero, std::vector<E> coeffs) : zero_(std::move(zero)), c_(std::move(coeffs)) { trim(); }

  static DensePoly constant(const E& c) { return DensePoly(c.zero_like(), {c}); }
  static DensePoly monomial(const E& c, std::size_t k) {
    std::vector<E> v(k + 1, c.zero_like());
    v[k] = c;
    return DensePoly(c.zero_like(), std::move(v));
  }
  /// The polynomial x.
  static DensePoly x(const E& zero) { return monomial(zero.one_like(), 1); }

  const E& zero_elem() const noexcept { return zero_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  const E& coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : zero_; }
  const E& lead() const noexcept { return c_.empty() ? zero_ : c_.back(); }
  const std::vector<E>& coeffs() const noexcept { return c_; }

  DensePoly operator-() const {
    DensePoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    DensePoly r = a.c_.size() >= b.c_.size() ? a : b;
    const DensePoly& s = a.c_.size() >= b.c_.size() ? b : a;
    for (std::size_t i = 0; i < s.c_.size(); ++i) r.c_[i] = r.c_[i] + s.c_[i];
    r.trim();
    return r;
  }
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly(a.zero_);
    std::vector<E> r(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return DensePoly(a.zero_, std::move(r));
  }
  DensePoly scaled(const E& c) const {
    if (c.is_zero()) return DensePoly(zero_);
    DensePoly r = *this;
    for (auto& x : r.c_) x = x * c;
    return r;
  }
  DensePoly monic() const {
    if (is_zero() || lead().is_one()) return *this;
    return scaled(lead().one_like() / lead());
  }
  DensePoly derivative() const {
    std::vector<E> r;
    E k = zero_;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      k = k + zero_.one_like();
      r.push_back(c_[i] * k);
    }
    return DensePoly(zero_, std::move(r));
  }
  E eval(const E& v) const {
    E r = zero_;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * v + c_[i];
    return r;
  }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

  struct DivMod {
    DensePoly quot;
    DensePoly rem;
  };
  /// Euclidean division; throws DivisionByZero when b = 0.
  friend DivMod divmod(const DensePoly& a, const DensePoly& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {DensePoly(a.zero_), a};
    std::vector<E> r = a.c_;
    const std::size_t db = b.c_.size() - 1;
    const E inv_lead = b.lead().one_like() / b.lead();
    std::vector<E> q(r.size() - db, a.zero_);
    for (std::size_t k = r.size(); k-- > db;) {
      if (r[k].is_zero()) continue;
      const E c = r[k] * inv_lead;
      q[k - db] = c;
      for (std::size_t i = 0; i < db; ++i) r[k - db + i] = r[k - db + i] - c * b.c_[i];
      r[k] = a.zero_;
    }
    r.resize(db, a.zero_);
    return {DensePoly(a.zero_, std::move(q)), DensePoly(a.zero_, std::move(r))};
  }
  friend DensePoly operator%(const DensePoly& a, const DensePoly& b) { return divmod(a, b).rem; }
  friend DensePoly operator/(const DensePoly& a, const DensePoly& b) { return divmod(a, b).quot; }

  /// Monic gcd.
  friend DensePoly gcd(DensePoly a, DensePoly b) {
    while (!b.is_zero()) {
      DensePoly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  struct Xgcd {
    DensePoly g;  // monic
    DensePoly s;
    DensePoly t;  // s*a + t*b = g
  };
  friend Xgcd xgcd(const DensePoly& a, const DensePoly& b) {
    const E& z = a.zero_;
    DensePoly r0 = a, r1 = b, s0 = constant(z.one_like()), s1(z), t0(z), t1 = constant(z.one_like());
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::exchange(r1, std::move(r));
      s0 = std::exchange(s1, s0 - q * s1);
      t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const E li = r0.lead().one_like() / r0.lead();
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  E zero_;
  std::vector<E> c_;
};

}  // namespace dforge
