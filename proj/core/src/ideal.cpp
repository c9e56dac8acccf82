#include "dforge/ideal.hpp"

#include <mutex>
#include <ostream>

#include "dforge/errors.hpp"

namespace dforge {

struct IdealA::FactorCache {
  std::once_flag once;
  std::vector<PrimePower> factors;
};

IdealA::IdealA(const PolyA& generator) : gen_(generator.monic()), cache_(std::make_shared<FactorCache>()) {
  if (gen_.is_zero()) fail(ErrorCode::ZeroIdeal, "the zero ideal is not supported");
}

const std::vector<PrimePower>& IdealA::factors() const {
  std::call_once(cache_->once, [this] {
    Rng rng(0x5eed'f00dULL);
    cache_->factors = factor(gen_, rng);
  });
  return cache_->factors;
}

std::vector<IdealA> IdealA::prime_factors() const {
  std::vector<IdealA> out;
  for (const auto& f : factors()) out.emplace_back(f.prime);
  return out;
}

bool IdealA::is_prime() const { return factors().size() == 1 && factors()[0].multiplicity == 1; }

bool IdealA::is_squarefree() const {
  for (const auto& f : factors())
    if (f.multiplicity > 1) return false;
  return true;
}

unsigned IdealA::valuation(const IdealA& p) const {
  if (p.is_unit()) fail(ErrorCode::InvalidArgument, "valuation at the unit ideal");
  unsigned v = 0;
  PolyA g = gen_;
  for (;;) {
    auto [quot, rem] = divmod(g, p.gen());
    if (!rem.is_zero()) return v;
    g = std::move(quot);
    ++v;
  }
}

std::vector<PrimePower> factor_ideal(const IdealA& n, Rng& rng) { return factor(n.gen(), rng); }

IdealA gcd(const IdealA& a, const IdealA& b) { return IdealA(gcd(a.gen(), b.gen())); }

IdealA lcm(const IdealA& a, const IdealA& b) { return IdealA(a.gen() * b.gen() / gcd(a.gen(), b.gen())); }

bool divides(const IdealA& a, const IdealA& b) { return divides(a.gen(), b.gen()); }

IdealA quotient(const IdealA& b, const IdealA& a) {
  auto [q, r] = divmod(b.gen(), a.gen());
  if (!r.is_zero()) fail(ErrorCode::DivisionInexact, "ideal quotient is not exact");
  return IdealA(q);
}

std::ostream& operator<<(std::ostream& os, const IdealA& n) { return os << '(' << n.gen() << ')'; }

}  // namespace dforge
