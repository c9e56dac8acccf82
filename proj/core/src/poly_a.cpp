#include "dforge/poly_a.hpp"

#include <algorithm>
#include <ostream>

#include "dforge/errors.hpp"

namespace dforge {
namespace {

void check_same(const PolyA& a, const PolyA& b) {
  if (&a.field() != &b.field()) fail(ErrorCode::FieldMismatch, "polynomials over different F_q");
}

}  // namespace

PolyA::PolyA(const FqField& field, std::vector<Value> coeffs) : field_(&field), c_(std::move(coeffs)) {
  for (auto c : c_)
    if (c >= field.order()) fail(ErrorCode::InvalidArgument, "coefficient outside F_q");
  trim();
}

PolyA PolyA::constant(const FqField& field, Value c) { return PolyA(field, {c}); }

PolyA PolyA::monomial(const FqField& field, Value c, std::size_t k) {
  PolyA r(field);
  if (c == 0) return r;
  r.c_.assign(k + 1, 0);
  r.c_[k] = c;
  return r;
}

void PolyA::trim() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyA PolyA::operator-() const {
  PolyA r = *this;
  for (auto& c : r.c_) c = field_->neg(c);
  return r;
}

PolyA& PolyA::operator+=(const PolyA& b) {
  check_same(*this, b);
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), 0);
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = field_->add(c_[i], b.c_[i]);
  trim();
  return *this;
}

PolyA& PolyA::operator-=(const PolyA& b) {
  check_same(*this, b);
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), 0);
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = field_->sub(c_[i], b.c_[i]);
  trim();
  return *this;
}

PolyA operator*(const PolyA& a, const PolyA& b) {
  check_same(a, b);
  const FqField& F = a.field();
  PolyA r(F);
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t n = a.c_.size(), m = b.c_.size();
  if (F.degree() == 1) {
    const std::uint64_t p = F.characteristic();
    std::vector<std::uint64_t> acc(n + m - 1, 0);
    // Each product is < 2^32; flush before 2^64 could overflow.
    const std::size_t flush = std::size_t(1) << 30;
    std::size_t pending = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t ai = a.c_[i];
      if (ai == 0) continue;
      for (std::size_t j = 0; j < m; ++j) acc[i + j] += ai * b.c_[j];
      if (++pending == flush) {
        for (auto& x : acc) x %= p;
        pending = 0;
      }
    }
    r.c_.resize(n + m - 1);
    for (std::size_t k = 0; k < acc.size(); ++k) r.c_[k] = static_cast<PolyA::Value>(acc[k] % p);
  } else {
    r.c_.assign(n + m - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r.c_[i + j] = F.add(r.c_[i + j], F.mul(a.c_[i], b.c_[j]));
    }
  }
  r.trim();
  return r;
}

PolyA PolyA::scaled(Value c) const {
  if (c == 0) return PolyA(*field_);
  PolyA r = *this;
  for (auto& x : r.c_) x = field_->mul(x, c);
  return r;
}

PolyA PolyA::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  PolyA r = *this;
  r.c_.insert(r.c_.begin(), k, 0);
  return r;
}

PolyA::Value PolyA::eval(Value x) const noexcept {
  Value r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, x), c_[i]);
  return r;
}

PolyA PolyA::derivative() const {
  PolyA r(*field_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = field_->mul(c_[i], field_->from_int(std::int64_t(i)));
  r.trim();
  return r;
}

PolyA PolyA::frobenius() const {
  PolyA r(*field_);
  if (is_zero()) return r;
  const std::size_t q = field_->order();
  r.c_.assign((c_.size() - 1) * q + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * q] = c_[i];
  return r;
}

PolyA PolyA::monic() const {
  if (is_zero() || lead() == 1) return *this;
  return scaled(field_->inv(lead()));
}

bool operator<(const PolyA& a, const PolyA& b) noexcept {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

PolyA PolyA::random(const FqField& field, Rng& rng, int max_degree) {
  std::vector<Value> c(static_cast<std::size_t>(std::max(max_degree, -1) + 1));
  for (auto& x : c) x = field.random(rng);
  return PolyA(field, std::move(c));
}

PolyA PolyA::random_monic(const FqField& field, Rng& rng, int degree) {
  std::vector<Value> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = field.random(rng);
  c.back() = 1;
  return PolyA(field, std::move(c));
}

PolyDivMod divmod(const PolyA& a, const PolyA& b) {
  check_same(a, b);
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  const FqField& F = a.field();
  if (a.degree() < b.degree()) return {PolyA(F), a};
  std::vector<PolyA::Value> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const PolyA::Value inv_lead = F.inv(bc.back());
  std::vector<PolyA::Value> q(r.size() - db, 0);
  for (std::size_t k = r.size(); k-- > db;) {
    const PolyA::Value c = F.mul(r[k], inv_lead);
    if (c == 0) continue;
    q[k - db] = c;
    const PolyA::Value nc = F.neg(c);
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = F.add(r[k - db + i], F.mul(nc, bc[i]));
  }
  r.resize(db);
  return {PolyA(F, std::move(q)), PolyA(F, std::move(r))};
}

PolyA operator/(const PolyA& a, const PolyA& b) { return divmod(a, b).quot; }
PolyA operator%(const PolyA& a, const PolyA& b) { return divmod(a, b).rem; }

bool divides(const PolyA& d, const PolyA& a) {
  if (d.is_zero()) return a.is_zero();
  return (a % d).is_zero();
}

PolyA gcd(const PolyA& a, const PolyA& b) {
  PolyA x = a, y = b;
  while (!y.is_zero()) {
    PolyA r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

PolyXgcd xgcd(const PolyA& a, const PolyA& b) {
  const FqField& F = a.field();
  PolyA r0 = a, r1 = b;
  PolyA s0 = PolyA::constant(F, 1), s1(F);
  PolyA t0(F), t1 = PolyA::constant(F, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    PolyA s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    PolyA t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const PolyA::Value li = F.inv(r0.lead());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

PolyA pow(const PolyA& a, std::uint64_t e) {
  PolyA r = PolyA::constant(a.field(), 1), b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

PolyA mulmod(const PolyA& a, const PolyA& b, const PolyA& m) { return (a * b) % m; }

PolyA powmod(const PolyA& a, std::uint64_t e, const PolyA& m) {
  PolyA r = PolyA::constant(a.field(), 1) % m, b = a % m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    e >>= 1;
    if (e) b = mulmod(b, b, m);
  }
  return r;
}

PolyA invmod(const PolyA& a, const PolyA& m) {
  auto g = xgcd(a % m, m);
  if (!g.g.is_one()) fail(ErrorCode::DivisionByZero, "element not invertible modulo m");
  return g.s % m;
}

PolyA frobenius_power_mod(std::size_t k, const PolyA& m) {
  PolyA x = PolyA::T(m.field()) % m;
  for (std::size_t i = 0; i < k; ++i) x = powmod(x, m.field().order(), m);
  return x;
}

std::ostream& operator<<(std::ostream& os, const PolyA& a) {
  if (a.is_zero()) return os << '0';
  const FqField& F = a.field();
  bool first = true;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const auto c = a.coeffs()[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    const bool show_coeff = (c != 1 || i == 0);
    if (show_coeff) os << FqElem(F, c);
    if (i > 0) {
      if (show_coeff) os << '*';
      os << 'T';
      if (i > 1) os << '^' << i;
    }
  }
  return os;
}

}  // namespace dforge
