#include "dforge/skew_poly.hpp"

#include <ostream>
#include <sstream>

#include "dforge/errors.hpp"

namespace dforge {

SkewPoly::SkewPoly(const ExtField& field, std::vector<ExtElem> coeffs) : field_(&field), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (&c.field() != field_) fail(ErrorCode::FieldMismatch, "skew polynomial coefficient from another field");
  trim();
}

void SkewPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

SkewPoly SkewPoly::constant(const ExtElem& c) { return SkewPoly(c.field(), {c}); }

SkewPoly SkewPoly::monomial(const ExtElem& c, std::size_t k) {
  std::vector<ExtElem> v(k + 1, c.zero_like());
  v[k] = c;
  return SkewPoly(c.field(), std::move(v));
}

ExtElem SkewPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }

const ExtElem& SkewPoly::lead() const {
  if (c_.empty()) fail(ErrorCode::ZeroPolynomial, "leading coefficient of the zero skew polynomial");
  return c_.back();
}

void check_same_field(const SkewPoly& a, const SkewPoly& b) {
  if (&a.field() != &b.field()) fail(ErrorCode::FieldMismatch, "skew polynomials over different fields");
}

SkewPoly SkewPoly::operator-() const {
  SkewPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
  check_same_field(a, b);
  SkewPoly r = a.c_.size() >= b.c_.size() ? a : b;
  const SkewPoly& s = a.c_.size() >= b.c_.size() ? b : a;
  for (std::size_t i = 0; i < s.c_.size(); ++i) r.c_[i] += s.c_[i];
  r.trim();
  return r;
}

SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }

SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
  check_same_field(a, b);
  const ExtField& K = a.field();
  if (a.is_zero() || b.is_zero()) return SkewPoly(K);
  std::vector<ExtElem> r(a.c_.size() + b.c_.size() - 1, K.zero());
  SkewPoly bf = b;  // b with coefficients raised to q^i
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (i > 0) bf = bf.frobenius_coeffs(1);
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < bf.c_.size(); ++j)
      if (!bf.c_[j].is_zero()) r[i + j] += a.c_[i] * bf.c_[j];
  }
  return SkewPoly(K, std::move(r));
}

SkewPoly SkewPoly::left_scaled(const ExtElem& c) const {
  if (&c.field() != field_) fail(ErrorCode::FieldMismatch, "scalar from another field");
  if (c.is_zero()) return SkewPoly(*field_);
  SkewPoly r = *this;
  for (auto& x : r.c_) x = c * x;
  return r;
}

SkewPoly SkewPoly::right_scaled(const ExtElem& c) const {
  if (&c.field() != field_) fail(ErrorCode::FieldMismatch, "scalar from another field");
  if (c.is_zero()) return SkewPoly(*field_);
  SkewPoly r = *this;
  ExtElem cq = c;
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (i > 0) cq = cq.frobenius();
    r.c_[i] = r.c_[i] * cq;
  }
  return r;
}

SkewPoly SkewPoly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return left_scaled(lead().inverse());
}

SkewPoly SkewPoly::frobenius_coeffs(std::size_t k) const {
  if (k == 0) return *this;
  SkewPoly r = *this;
  for (auto& c : r.c_) c = c.frobenius(k);
  return r;
}

ExtElem SkewPoly::eval(const ExtElem& lambda) const {
  if (&lambda.field() != field_) fail(ErrorCode::FieldMismatch, "evaluation point from another field");
  ExtElem r = field_->zero(), lq = lambda;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i > 0) lq = lq.frobenius();
    r += c_[i] * lq;
  }
  return r;
}

ExtElem SkewPoly::differential() const { return coeff(0); }

SkewPoly SkewPoly::random(const ExtField& field, Rng& rng, int degree, int max_num_degree, int max_den_degree) {
  std::vector<ExtElem> c;
  for (int i = 0; i <= degree; ++i) c.push_back(field.random(rng, max_num_degree, max_den_degree));
  if (degree >= 0)
    while (c.back().is_zero()) c.back() = field.random(rng, max_num_degree, max_den_degree);
  return SkewPoly(field, std::move(c));
}

SkewDivMod right_divmod(const SkewPoly& a, const SkewPoly& b) {
  check_same_field(a, b);
  const ExtField& K = a.field();
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "right division by the zero skew polynomial");
  if (a.degree() < b.degree()) return {SkewPoly(K), a};
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const std::size_t top = static_cast<std::size_t>(a.degree() - b.degree());
  // bf[k] = b with coefficients raised to q^k, so that τ^k b = bf[k] τ^k
  std::vector<SkewPoly> bf{b};
  std::vector<ExtElem> lead_inv{b.lead().inverse()};
  for (std::size_t k = 1; k <= top; ++k) {
    bf.push_back(bf.back().frobenius_coeffs(1));
    lead_inv.push_back(lead_inv.back().frobenius());
  }
  std::vector<ExtElem> r = a.coeffs();
  std::vector<ExtElem> q(top + 1, K.zero());
  for (std::size_t deg = r.size(); deg-- > db;) {
    if (r[deg].is_zero()) continue;
    const std::size_t k = deg - db;
    const ExtElem c = r[deg] * lead_inv[k];
    q[k] = c;
    for (std::size_t j = 0; j < db; ++j)
      if (!bf[k].coeffs()[j].is_zero()) r[k + j] -= c * bf[k].coeffs()[j];
    r[deg] = K.zero();
  }
  r.resize(db, K.zero());
  return {SkewPoly(K, std::move(q)), SkewPoly(K, std::move(r))};
}

bool right_divides(const SkewPoly& b, const SkewPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return right_divmod(a, b).rem.is_zero();
}

SkewPoly exact_right_quotient(const SkewPoly& a, const SkewPoly& b) {
  auto [q, r] = right_divmod(a, b);
  if (!r.is_zero()) fail(ErrorCode::DivisionInexact, "skew polynomial is not right-divisible");
  return q;
}

SkewPoly right_gcd(const SkewPoly& a, const SkewPoly& b) {
  check_same_field(a, b);
  if (a.is_zero() && b.is_zero()) fail(ErrorCode::BothZero, "right gcd of two zero skew polynomials");
  // remainders are kept monic: the left ideal they generate is unchanged and
  // the Frobenius twists of a unit leading coefficient stay trivial
  SkewPoly x = a.is_zero() ? a : a.monic(), y = b.is_zero() ? b : b.monic();
  while (!y.is_zero()) {
    SkewPoly r = right_divmod(x, y).rem;
    x = std::move(y);
    y = r.is_zero() ? std::move(r) : r.monic();
  }
  return x;
}

SkewPoly conjugate(const GaloisDatum& galois, const GroupElem& s, const SkewPoly& a) {
  if (&galois.field() != &a.field()) fail(ErrorCode::FieldMismatch, "Galois datum acts on another field");
  std::vector<ExtElem> c;
  for (const auto& x : a.coeffs()) c.push_back(galois.apply(s, x));
  return SkewPoly(a.field(), std::move(c));
}

namespace {
bool needs_parens(const std::string& s) { return s.find(" + ") != std::string::npos || s.find('/') != std::string::npos; }
}  // namespace

std::ostream& operator<<(std::ostream& os, const SkewPoly& a) {
  if (a.is_zero()) return os << '0';
  bool first = true;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const ExtElem& c = a.coeffs()[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::ostringstream cs;
    cs << c;
    if (i == 0) {
      os << cs.str();
      continue;
    }
    if (!c.is_one()) {
      if (needs_parens(cs.str()))
        os << '(' << cs.str() << ")*";
      else
        os << cs.str() << '*';
    }
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os;
}

}  // namespace dforge
