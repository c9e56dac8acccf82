#pragma once

#include <iosfwd>
#include <vector>

#include "dforge/ext_field.hpp"
#include "dforge/galois.hpp"

namespace dforge {

/// An element of K{τ} with τc = c^q τ; coefficient of τ^i at index i.
/// All coefficients live in one declared field K.
class SkewPoly {
 public:
  explicit SkewPoly(const ExtField& field) : field_(&field) {}
  SkewPoly(const ExtField& field, std::vector<ExtElem> coeffs);

  static SkewPoly constant(const ExtElem& c);
  static SkewPoly monomial(const ExtElem& c, std::size_t k);
  static SkewPoly tau(const ExtField& field) { return monomial(field.one(), 1); }

  const ExtField& field() const noexcept { return *field_; }
  /// τ-degree; -1 for zero.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }
  ExtElem coeff(std::size_t i) const;
  const ExtElem& lead() const;
  const std::vector<ExtElem>& coeffs() const noexcept { return c_; }

  SkewPoly operator-() const;
  friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
  friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b);
  friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b);
  SkewPoly& operator+=(const SkewPoly& b) { return *this = *this + b; }
  SkewPoly& operator-=(const SkewPoly& b) { return *this = *this - b; }
  SkewPoly& operator*=(const SkewPoly& b) { return *this = *this * b; }

  /// c·a
  SkewPoly left_scaled(const ExtElem& c) const;
  /// a·c = Σ a_i c^{q^i} τ^i
  SkewPoly right_scaled(const ExtElem& c) const;
  /// Left-multiplied by the inverse of the leading coefficient.
  SkewPoly monic() const;
  /// The skew polynomial with every coefficient raised to the q^k-th power;
  /// τ^k·a = frobenius_coeffs(k)·τ^k.
  SkewPoly frobenius_coeffs(std::size_t k) const;

  /// a(λ) = Σ c_i λ^{q^i}
  ExtElem eval(const ExtElem& lambda) const;
  /// ∂a = c_0
  ExtElem differential() const;

  friend bool operator==(const SkewPoly& a, const SkewPoly& b) noexcept {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  static SkewPoly random(const ExtField& field, Rng& rng, int degree, int max_num_degree, int max_den_degree);

 private:
  void trim();

  const ExtField* field_;
  std::vector<ExtElem> c_;
};

struct SkewDivMod {
  SkewPoly quot;
  SkewPoly rem;
};

/// a = quot·b + rem, deg_τ rem < deg_τ b. Throws DivisionByZero when b = 0.
SkewDivMod right_divmod(const SkewPoly& a, const SkewPoly& b);
/// True iff b right-divides a.
bool right_divides(const SkewPoly& b, const SkewPoly& a);
/// The q with a = q·b; throws DivisionInexact when the remainder is nonzero.
SkewPoly exact_right_quotient(const SkewPoly& a, const SkewPoly& b);
/// Monic generator of the left ideal K{τ}a + K{τ}b; throws BothZero.
SkewPoly right_gcd(const SkewPoly& a, const SkewPoly& b);
/// Coefficientwise action of the group element s.
SkewPoly conjugate(const GaloisDatum& galois, const GroupElem& s, const SkewPoly& a);

void check_same_field(const SkewPoly& a, const SkewPoly& b);

/// Text form "c0 + c1*t + c2*t^2" with t standing for τ.
std::ostream& operator<<(std::ostream& os, const SkewPoly& a);

}  // namespace dforge
