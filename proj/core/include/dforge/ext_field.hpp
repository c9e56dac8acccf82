#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <vector>

#include "dforge/dense_poly.hpp"
#include "dforge/rat_func.hpp"

namespace dforge {

class ExtElem;
using PolyQ = DensePoly<RatFunc>;

/// K = Q[x]/(f) for a monic f of degree e over Q = F_q(T).
///
/// Irreducibility of f is checked only up to the absence of roots in Q; a
/// reducible f of degree >= 4 is detected later when an inverse fails
/// (NotAField).
class ExtField {
 public:
  /// `modulus` is f, little-endian, monic, degree >= 1.
  static std::shared_ptr<const ExtField> create(FqFieldPtr fq, std::vector<RatFunc> modulus);
  /// K = Q itself (e = 1).
  static std::shared_ptr<const ExtField> rational(FqFieldPtr fq);

  ExtField(const ExtField&) = delete;
  ExtField& operator=(const ExtField&) = delete;

  const FqField& fq() const noexcept { return *fq_; }
  const FqFieldPtr& fq_ptr() const noexcept { return fq_; }
  std::size_t degree() const noexcept { return e_; }
  bool is_rational() const noexcept { return e_ == 1; }
  const std::vector<RatFunc>& modulus() const noexcept { return f_; }
  PolyQ modulus_poly() const;

  ExtElem zero() const;
  ExtElem one() const;
  ExtElem from_fq(FqField::Value c) const;
  ExtElem from_rat(const RatFunc& r) const;
  ExtElem from_poly(const PolyA& a) const;
  ExtElem T() const;
  /// The class of x; equals 0 when e = 1 and f = x.
  ExtElem gen() const;
  ExtElem from_coords(std::vector<RatFunc> coords) const;
  /// Reduction of a polynomial in x modulo f.
  ExtElem reduce(const PolyQ& a) const;
  ExtElem random(Rng& rng, int max_num_degree, int max_den_degree) const;

  /// (x^q)^i mod f for i < e, computed once by square-and-multiply.
  const std::vector<ExtElem>& frobenius_basis() const noexcept { return xq_powers_; }

 private:
  ExtField(FqFieldPtr fq, std::vector<RatFunc> modulus);
  void init_frobenius();

  FqFieldPtr fq_;
  std::size_t e_;
  std::vector<RatFunc> f_;
  std::vector<ExtElem> xq_powers_;
};

using ExtFieldPtr = std::shared_ptr<const ExtField>;

/// An element of K as its coordinate vector over Q in the basis 1, x, ..., x^{e-1}.
class ExtElem {
 public:
  ExtElem(const ExtField& field, std::vector<RatFunc> coords);

  const ExtField& field() const noexcept { return *field_; }
  const std::vector<RatFunc>& coords() const noexcept { return c_; }
  const RatFunc& coord(std::size_t i) const noexcept { return c_[i]; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when the element lies in Q (all higher coordinates vanish).
  bool is_rational() const noexcept;
  /// True when the element lies in F_q.
  bool is_fq() const noexcept { return is_rational() && c_[0].is_constant(); }
  FqField::Value fq_value() const noexcept { return c_[0].constant_value(); }

  ExtElem zero_like() const;
  ExtElem one_like() const;

  ExtElem operator-() const;
  friend ExtElem operator+(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator-(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator*(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator/(const ExtElem& a, const ExtElem& b);
  ExtElem& operator+=(const ExtElem& b) { return *this = *this + b; }
  ExtElem& operator-=(const ExtElem& b) { return *this = *this - b; }
  ExtElem& operator*=(const ExtElem& b) { return *this = *this * b; }
  ExtElem scaled(const RatFunc& r) const;
  ExtElem scaled(FqField::Value c) const;

  /// Throws DivisionByZero for 0 and NotAField when f turns out reducible.
  ExtElem inverse() const;
  /// a -> a^q through the precomputed images of the power basis.
  ExtElem frobenius() const;
  ExtElem frobenius(std::size_t k) const;
  /// Square-and-multiply; negative exponents invert first.
  ExtElem pow(std::int64_t e) const;
  ExtElem pow_u(std::uint64_t e) const;

  friend bool operator==(const ExtElem& a, const ExtElem& b) noexcept {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  friend bool operator<(const ExtElem& a, const ExtElem& b) noexcept { return a.c_ < b.c_; }

  PolyQ as_poly() const;

 private:
  const ExtField* field_;
  std::vector<RatFunc> c_;
};

void check_same_field(const ExtElem& a, const ExtElem& b);

/// Human-readable text: coordinates joined as "c0 + (c1)*x + ...".
std::ostream& operator<<(std::ostream& os, const ExtElem& a);

}  // namespace dforge
