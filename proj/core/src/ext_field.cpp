#include "dforge/ext_field.hpp"

#include <ostream>
#include <sstream>

#include "dforge/errors.hpp"
#include "dforge/rational_roots.hpp"

namespace dforge {

ExtField::ExtField(FqFieldPtr fq, std::vector<RatFunc> modulus)
    : fq_(std::move(fq)), e_(modulus.size() - 1), f_(std::move(modulus)) {}

std::shared_ptr<const ExtField> ExtField::create(FqFieldPtr fq, std::vector<RatFunc> modulus) {
  if (!fq) fail(ErrorCode::InvalidField, "missing F_q");
  while (!modulus.empty() && modulus.back().is_zero()) modulus.pop_back();
  if (modulus.size() < 2) fail(ErrorCode::InvalidField, "extension modulus must have degree >= 1");
  if (!modulus.back().is_one()) fail(ErrorCode::InvalidField, "extension modulus must be monic");
  for (const auto& c : modulus)
    if (&c.field() != fq.get()) fail(ErrorCode::FieldMismatch, "extension modulus over a different F_q");
  if (modulus.size() > 2) {
    PolyQ f(RatFunc(*fq), modulus);
    if (!rational_roots(f).empty()) fail(ErrorCode::NotAField, "extension modulus has a root in F_q(T)");
  }
  std::shared_ptr<ExtField> K(new ExtField(std::move(fq), std::move(modulus)));
  K->init_frobenius();
  return K;
}

std::shared_ptr<const ExtField> ExtField::rational(FqFieldPtr fq) {
  if (!fq) fail(ErrorCode::InvalidField, "missing F_q");
  const FqField& F = *fq;
  return create(std::move(fq), {RatFunc(F), RatFunc::constant(F, 1)});
}

void ExtField::init_frobenius() {
  xq_powers_.clear();
  xq_powers_.push_back(one());
  if (e_ == 1) return;
  const ExtElem xq = gen().pow_u(fq_->order());
  for (std::size_t i = 1; i < e_; ++i) xq_powers_.push_back(xq_powers_.back() * xq);
}

PolyQ ExtField::modulus_poly() const { return PolyQ(RatFunc(*fq_), f_); }

ExtElem ExtField::zero() const { return ExtElem(*this, {}); }
ExtElem ExtField::one() const { return from_fq(1); }
ExtElem ExtField::from_fq(FqField::Value c) const { return ExtElem(*this, {RatFunc::constant(*fq_, c)}); }
ExtElem ExtField::from_rat(const RatFunc& r) const { return ExtElem(*this, {r}); }
ExtElem ExtField::from_poly(const PolyA& a) const { return ExtElem(*this, {RatFunc(a)}); }
ExtElem ExtField::T() const { return from_rat(RatFunc::T(*fq_)); }

ExtElem ExtField::gen() const {
  if (e_ == 1) return from_rat(-f_[0]);
  std::vector<RatFunc> c(2, RatFunc(*fq_));
  c[1] = RatFunc::constant(*fq_, 1);
  return ExtElem(*this, std::move(c));
}

ExtElem ExtField::from_coords(std::vector<RatFunc> coords) const {
  if (coords.size() > e_) return reduce(PolyQ(RatFunc(*fq_), std::move(coords)));
  return ExtElem(*this, std::move(coords));
}

ExtElem ExtField::reduce(const PolyQ& a) const {
  if (a.degree() < static_cast<int>(e_)) return ExtElem(*this, a.coeffs());
  std::vector<RatFunc> r = a.coeffs();
  for (std::size_t k = r.size(); k-- > e_;) {
    if (r[k].is_zero()) continue;
    const RatFunc c = r[k];
    for (std::size_t i = 0; i < e_; ++i)
      if (!f_[i].is_zero()) r[k - e_ + i] -= c * f_[i];
  }
  r.resize(e_, RatFunc(*fq_));
  return ExtElem(*this, std::move(r));
}

ExtElem ExtField::random(Rng& rng, int max_num_degree, int max_den_degree) const {
  std::vector<RatFunc> c;
  for (std::size_t i = 0; i < e_; ++i) c.push_back(RatFunc::random(*fq_, rng, max_num_degree, max_den_degree));
  return ExtElem(*this, std::move(c));
}

ExtElem::ExtElem(const ExtField& field, std::vector<RatFunc> coords) : field_(&field), c_(std::move(coords)) {
  if (c_.size() > field.degree()) fail(ErrorCode::InvalidArgument, "too many coordinates for K");
  for (const auto& c : c_)
    if (&c.field() != &field.fq()) fail(ErrorCode::FieldMismatch, "coordinate over a different F_q");
  c_.resize(field.degree(), RatFunc(field.fq()));
}

void check_same_field(const ExtElem& a, const ExtElem& b) {
  if (&a.field() != &b.field()) fail(ErrorCode::FieldMismatch, "elements of different extension fields");
}

bool ExtElem::is_zero() const noexcept {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool ExtElem::is_one() const noexcept { return c_[0].is_one() && is_rational(); }

bool ExtElem::is_rational() const noexcept {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

ExtElem ExtElem::zero_like() const { return field_->zero(); }
ExtElem ExtElem::one_like() const { return field_->one(); }

ExtElem ExtElem::operator-() const {
  ExtElem r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

ExtElem operator+(const ExtElem& a, const ExtElem& b) {
  check_same_field(a, b);
  ExtElem r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

ExtElem operator-(const ExtElem& a, const ExtElem& b) {
  check_same_field(a, b);
  ExtElem r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
  return r;
}

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
  check_same_field(a, b);
  const std::size_t e = a.c_.size();
  if (e == 1) return ExtElem(*a.field_, {a.c_[0] * b.c_[0]});
  if (b.is_rational()) return a.scaled(b.c_[0]);
  if (a.is_rational()) return b.scaled(a.c_[0]);
  const RatFunc zero(a.field_->fq());
  std::vector<RatFunc> prod(2 * e - 1, zero);
  for (std::size_t i = 0; i < e; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < e; ++j)
      if (!b.c_[j].is_zero()) prod[i + j] += a.c_[i] * b.c_[j];
  }
  return a.field_->reduce(PolyQ(zero, std::move(prod)));
}

ExtElem operator/(const ExtElem& a, const ExtElem& b) { return a * b.inverse(); }

ExtElem ExtElem::scaled(const RatFunc& r) const {
  ExtElem out = *this;
  for (auto& c : out.c_)
    if (!c.is_zero()) c *= r;
  return out;
}

ExtElem ExtElem::scaled(FqField::Value v) const {
  ExtElem out = *this;
  for (auto& c : out.c_) c = c.scaled(v);
  return out;
}

PolyQ ExtElem::as_poly() const { return PolyQ(RatFunc(field_->fq()), c_); }

ExtElem ExtElem::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in K");
  if (is_rational()) return field_->from_rat(c_[0].inverse());
  auto g = xgcd(as_poly(), field_->modulus_poly());
  if (!g.g.is_one()) fail(ErrorCode::NotAField, "extension modulus is reducible: element has no inverse");
  return field_->reduce(g.s);
}

ExtElem ExtElem::frobenius() const {
  if (c_.size() == 1) return ExtElem(*field_, {c_[0].frobenius()});
  const auto& basis = field_->frobenius_basis();
  ExtElem r = field_->zero();
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) r += basis[i].scaled(c_[i].frobenius());
  return r;
}

ExtElem ExtElem::frobenius(std::size_t k) const {
  ExtElem r = *this;
  for (std::size_t i = 0; i < k; ++i) r = r.frobenius();
  return r;
}

ExtElem ExtElem::pow_u(std::uint64_t e) const {
  ExtElem r = field_->one(), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

ExtElem ExtElem::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow_u(static_cast<std::uint64_t>(-e));
  return pow_u(static_cast<std::uint64_t>(e));
}

namespace {
bool is_atom(const RatFunc& r) {
  // single term without '+' needs no parentheses
  std::ostringstream s;
  s << r;
  return s.str().find(" + ") == std::string::npos && r.is_polynomial();
}
}  // namespace

std::ostream& operator<<(std::ostream& os, const ExtElem& a) {
  if (a.is_zero()) return os << '0';
  bool first = true;
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    const RatFunc& c = a.coord(i);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (!c.is_one()) {
      if (is_atom(c))
        os << c << '*';
      else
        os << '(' << c << ")*";
    }
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os;
}

}  // namespace dforge
