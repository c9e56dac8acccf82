#include "dforge/fq.hpp"

#include <ostream>

#include "dforge/errors.hpp"

namespace dforge {
namespace {

using Coeffs = std::vector<std::uint32_t>;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

std::vector<std::uint32_t> prime_divisors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) {
      out.push_back(k);
      while (n % k == 0) n /= k;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomials over F_p, used only to bootstrap the field tables.
void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

Coeffs rem_fp(Coeffs a, const Coeffs& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lc_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = std::uint64_t(a.back()) * lc_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
    trim(a);
  }
  return a;
}

Coeffs mulmod_fp(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  return rem_fp(std::move(r), m, p);
}

Coeffs powmod_fp(Coeffs base, std::uint64_t e, const Coeffs& m, std::uint32_t p) {
  Coeffs r{1};
  base = rem_fp(std::move(base), m, p);
  while (e) {
    if (e & 1) r = mulmod_fp(r, base, m, p);
    base = mulmod_fp(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Coeffs gcd_fp(Coeffs a, Coeffs b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = rem_fp(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool irreducible_fp(const Coeffs& m, std::uint32_t p) {
  const unsigned d = static_cast<unsigned>(m.size() - 1);
  if (d == 1) return true;
  const Coeffs y{0, 1};
  // y^(p^d) == y (mod m)
  Coeffs t = y;
  for (unsigned i = 0; i < d; ++i) t = powmod_fp(t, p, m, p);
  if (rem_fp(t, m, p) != rem_fp(y, m, p)) return false;
  for (std::uint32_t r : prime_divisors(d)) {
    Coeffs s = y;
    for (unsigned i = 0; i < d / r; ++i) s = powmod_fp(s, p, m, p);
    s.resize(std::max<std::size_t>(s.size(), 2), 0);
    s[1] = (s[1] + p - 1) % p;
    trim(s);
    if (gcd_fp(m, s, p).size() != 1) return false;
  }
  return true;
}

}  // namespace

FqField::FqField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), d_(static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  q_ = static_cast<std::uint32_t>(ipow(p_, d_));

  auto encode = [&](const Coeffs& c) {
    Value v = 0, scale = 1;
    for (std::size_t i = 0; i < c.size(); ++i, scale *= p_) v += c[i] * scale;
    return v;
  };
  auto decode = [&](Value v) {
    Coeffs c(d_, 0);
    for (unsigned i = 0; i < d_; ++i, v /= p_) c[i] = v % p_;
    trim(c);
    return c;
  };

  // Find a generator of the multiplicative group.
  const auto divisors = prime_divisors(q_ - 1);
  Coeffs gen;
  for (Value cand = 1; cand < q_; ++cand) {
    Coeffs g = decode(cand);
    bool primitive = true;
    for (std::uint32_t r : divisors) {
      if (powmod_fp(g, (q_ - 1) / r, modulus_, p_) == Coeffs{1}) {
        primitive = false;
        break;
      }
    }
    if (q_ == 2 || primitive) {
      gen = std::move(g);
      break;
    }
  }
  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  Coeffs cur{1};
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    const Value v = encode(cur);
    exp_[i] = exp_[i + q_ - 1] = v;
    log_[v] = i;
    cur = mulmod_fp(cur, gen, modulus_, p_);
  }

  neg_table_.resize(q_);
  for (Value a = 0; a < q_; ++a) {
    Coeffs c = decode(a);
    for (auto& x : c) x = (p_ - x) % p_;
    neg_table_[a] = encode(c);
  }
  if (d_ > 1 && q_ <= 256) {
    add_table_.resize(std::size_t(q_) * q_);
    for (Value a = 0; a < q_; ++a)
      for (Value b = 0; b < q_; ++b) add_table_[a * q_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
  }
}

std::shared_ptr<const FqField> FqField::create(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) fail(ErrorCode::InvalidField, "characteristic must be prime");
  if (modulus.size() < 2 || modulus.back() != 1)
    fail(ErrorCode::InvalidField, "F_q modulus must be monic of degree >= 1");
  for (auto c : modulus)
    if (c >= p) fail(ErrorCode::InvalidField, "F_q modulus coefficients must be reduced mod p");
  if (ipow(p, static_cast<unsigned>(modulus.size() - 1)) > 65536)
    fail(ErrorCode::InvalidField, "q must not exceed 65536");
  if (!irreducible_fp(modulus, p)) fail(ErrorCode::InvalidField, "F_q modulus is not irreducible");
  return std::shared_ptr<const FqField>(new FqField(p, std::move(modulus)));
}

std::shared_ptr<const FqField> FqField::prime(std::uint32_t p) { return create(p, {0, 1}); }

std::shared_ptr<const FqField> FqField::with_degree(std::uint32_t p, unsigned d) {
  if (!is_prime(p)) fail(ErrorCode::InvalidField, "characteristic must be prime");
  if (d == 0 || ipow(p, d) > 65536) fail(ErrorCode::InvalidField, "unsupported extension degree");
  if (d == 1) return prime(p);
  const std::uint64_t count = ipow(p, d);
  for (std::uint64_t n = 0; n < count; ++n) {
    Coeffs m(d + 1, 0);
    m[d] = 1;
    std::uint64_t v = n;
    for (unsigned i = 0; i < d; ++i, v /= p) m[i] = static_cast<std::uint32_t>(v % p);
    if (m[0] != 0 && irreducible_fp(m, p)) return create(p, std::move(m));
  }
  fail(ErrorCode::InternalInconsistency, "no irreducible modulus found");
}

FqField::Value FqField::add_digits(Value a, Value b) const noexcept {
  Value r = 0, scale = 1;
  for (unsigned i = 0; i < d_; ++i, scale *= p_) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
  }
  return r;
}

FqField::Value FqField::inv(Value a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in F_q");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FqField::Value FqField::pow(Value a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

FqField::Value FqField::pth_root(Value a) const noexcept { return pow(a, q_ / p_); }

FqField::Value FqField::from_int(std::int64_t n) const noexcept {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Value>(r);
}

FqField::Value FqField::from_coords(std::span<const std::uint32_t> c) const {
  if (c.size() > d_) fail(ErrorCode::InvalidArgument, "too many F_q coordinates");
  Value v = 0, scale = 1;
  for (std::size_t i = 0; i < c.size(); ++i, scale *= p_) v += (c[i] % p_) * scale;
  return v;
}

std::vector<std::uint32_t> FqField::coords(Value a) const {
  std::vector<std::uint32_t> c(d_, 0);
  for (unsigned i = 0; i < d_; ++i, a /= p_) c[i] = a % p_;
  return c;
}

std::uint32_t FqField::multiplicative_order(Value a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "order of zero");
  std::uint32_t n = q_ - 1;
  std::uint32_t ord = n;
  for (std::uint32_t r : prime_divisors(n))
    while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
  return ord;
}

FqField::Value FqField::random(Rng& rng) const {
  return static_cast<Value>(std::uniform_int_distribution<std::uint32_t>(0, q_ - 1)(rng));
}

FqField::Value FqField::random_nonzero(Rng& rng) const {
  return static_cast<Value>(std::uniform_int_distribution<std::uint32_t>(1, q_ - 1)(rng));
}

namespace {
void check_same(const FqElem& a, const FqElem& b) {
  if (&a.field() != &b.field()) fail(ErrorCode::FieldMismatch, "F_q elements from different fields");
}
}  // namespace

FqElem FqElem::operator+(const FqElem& o) const {
  check_same(*this, o);
  return {*field_, field_->add(v_, o.v_)};
}
FqElem FqElem::operator-(const FqElem& o) const {
  check_same(*this, o);
  return {*field_, field_->sub(v_, o.v_)};
}
FqElem FqElem::operator*(const FqElem& o) const {
  check_same(*this, o);
  return {*field_, field_->mul(v_, o.v_)};
}
FqElem FqElem::operator/(const FqElem& o) const {
  check_same(*this, o);
  return {*field_, field_->div(v_, o.v_)};
}

std::ostream& operator<<(std::ostream& os, const FqElem& a) {
  if (a.field().degree() == 1) return os << a.value();
  os << '[';
  const auto c = a.coords();
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  return os << ']';
}

}  // namespace dforge
