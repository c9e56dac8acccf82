#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <random>
#include <span>
#include <vector>

namespace dforge {

/// Caller-owned randomness. Every randomized algorithm takes one explicitly.
using Rng = std::mt19937_64;

/// The finite field F_q = F_p[y]/(m(y)) for a monic irreducible m of degree d.
///
/// Elements are encoded as integers in [0, q): the coordinate vector
/// (c_0, ..., c_{d-1}) w.r.t. the power basis 1, y, ..., y^{d-1} is stored as
/// sum c_i p^i. Multiplication goes through discrete log tables, so q is
/// limited to 2^16.
class FqField {
 public:
  using Value = std::uint32_t;

  /// `modulus` is little-endian over F_p, monic, irreducible, degree >= 1.
  static std::shared_ptr<const FqField> create(std::uint32_t p, std::vector<std::uint32_t> modulus);
  static std::shared_ptr<const FqField> prime(std::uint32_t p);
  /// F_{p^d} with the lexicographically first monic irreducible modulus.
  static std::shared_ptr<const FqField> with_degree(std::uint32_t p, unsigned d);

  FqField(const FqField&) = delete;
  FqField& operator=(const FqField&) = delete;

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return d_; }
  std::uint32_t order() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Value add(Value a, Value b) const noexcept {
    if (d_ == 1) {
      Value s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
  }
  Value neg(Value a) const noexcept { return neg_table_[a]; }
  Value sub(Value a, Value b) const noexcept { return add(a, neg_table_[b]); }
  Value mul(Value a, Value b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Value inv(Value a) const;
  Value div(Value a, Value b) const { return mul(a, inv(b)); }
  Value pow(Value a, std::uint64_t e) const noexcept;
  /// The unique b with b^p = a.
  Value pth_root(Value a) const noexcept;

  Value from_int(std::int64_t n) const noexcept;
  Value from_coords(std::span<const std::uint32_t> coords) const;
  std::vector<std::uint32_t> coords(Value a) const;
  Value primitive_element() const noexcept { return exp_[1]; }
  /// Order of a in the multiplicative group; a must be nonzero.
  std::uint32_t multiplicative_order(Value a) const;
  Value random(Rng& rng) const;
  Value random_nonzero(Rng& rng) const;

 private:
  FqField(std::uint32_t p, std::vector<std::uint32_t> modulus);
  Value add_digits(Value a, Value b) const noexcept;

  std::uint32_t p_;
  unsigned d_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Value> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> log_;
  std::vector<Value> neg_table_;
  std::vector<std::uint16_t> add_table_;
};

using FqFieldPtr = std::shared_ptr<const FqField>;

/// A value-typed element of F_q, for callers that want operator syntax.
/// Polynomial kernels work on raw FqField::Value instead.
class FqElem {
 public:
  FqElem(const FqField& field, FqField::Value v) : field_(&field), v_(v) {}

  const FqField& field() const noexcept { return *field_; }
  FqField::Value value() const noexcept { return v_; }
  std::vector<std::uint32_t> coords() const { return field_->coords(v_); }
  bool is_zero() const noexcept { return v_ == 0; }

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  FqElem operator-() const { return {*field_, field_->neg(v_)}; }
  FqElem inverse() const { return {*field_, field_->inv(v_)}; }

  friend bool operator==(const FqElem& a, const FqElem& b) noexcept {
    return a.field_ == b.field_ && a.v_ == b.v_;
  }

 private:
  const FqField* field_;
  FqField::Value v_;
};

std::ostream& operator<<(std::ostream& os, const FqElem& a);

}  // namespace dforge
