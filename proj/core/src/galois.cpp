#include "dforge/galois.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "dforge/errors.hpp"

namespace dforge {

GaloisDatum::GaloisDatum(ExtFieldPtr field, std::vector<GaloisGenerator> generators)
    : field_(std::move(field)), gens_(std::move(generators)) {
  if (!field_) fail(ErrorCode::InvalidField, "Galois datum without a field");
  const ExtField& K = *field_;
  const PolyQ f = K.modulus_poly();
  std::set<std::string> names;
  for (const auto& g : gens_) {
    if (&g.image.field() != &K) fail(ErrorCode::FieldMismatch, "generator image lives in another field");
    if (g.order == 0) fail(ErrorCode::InvalidAutomorphism, "generator order must be positive");
    if (g.name.empty() || g.name == "id" || !names.insert(g.name).second)
      fail(ErrorCode::InvalidAutomorphism, "generator names must be distinct and not 'id'");
    // f(s(x)) = 0 via Horner in K
    ExtElem v = K.zero();
    for (std::size_t i = f.coeffs().size(); i-- > 0;) v = v * g.image + K.from_rat(f.coeff(i));
    if (!v.is_zero()) fail(ErrorCode::InvalidAutomorphism, "image of '" + g.name + "' is not a root of f");
  }
  for (const auto& g : gens_) {
    std::vector<ExtElem> pw{K.one()};
    for (std::size_t k = 1; k < K.degree(); ++k) pw.push_back(pw.back() * g.image);
    image_powers_.push_back(std::move(pw));
  }
  const ExtElem x = K.gen();
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    ExtElem y = x;
    for (std::uint32_t k = 1; k <= gens_[i].order; ++k) {
      y = apply_generator(i, y);
      if ((y == x) != (k == gens_[i].order))
        fail(ErrorCode::InvalidAutomorphism, "generator '" + gens_[i].name + "' does not have the declared order");
    }
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (!(apply_generator(i, gens_[j].image) == apply_generator(j, gens_[i].image)))
        fail(ErrorCode::InvalidAutomorphism, "generators do not commute");
  }
  if (group_order() > K.degree())
    fail(ErrorCode::InvalidAutomorphism, "group is larger than [K:Q]");
  std::set<std::vector<RatFunc>> seen;
  for (const auto& s : elements())
    if (!seen.insert(image_of_gen(s).coords()).second)
      fail(ErrorCode::InvalidAutomorphism, "presentation is not faithful");
}

GaloisDatum GaloisDatum::trivial(ExtFieldPtr field) { return GaloisDatum(std::move(field), {}); }

std::uint64_t GaloisDatum::group_order() const noexcept {
  std::uint64_t n = 1;
  for (const auto& g : gens_) n *= g.order;
  return n;
}

GroupElem GaloisDatum::generator(std::size_t i) const {
  GroupElem e = identity();
  if (i >= gens_.size()) fail(ErrorCode::InvalidArgument, "generator index out of range");
  e[i] = gens_[i].order > 1 ? 1 : 0;
  return e;
}

GroupElem GaloisDatum::compose(const GroupElem& a, const GroupElem& b) const {
  GroupElem r(gens_.size());
  for (std::size_t i = 0; i < gens_.size(); ++i) r[i] = (a[i] + b[i]) % gens_[i].order;
  return r;
}

GroupElem GaloisDatum::inverse(const GroupElem& a) const {
  GroupElem r(gens_.size());
  for (std::size_t i = 0; i < gens_.size(); ++i) r[i] = (gens_[i].order - a[i] % gens_[i].order) % gens_[i].order;
  return r;
}

bool GaloisDatum::is_identity(const GroupElem& a) const noexcept {
  for (auto v : a)
    if (v) return false;
  return true;
}

std::vector<GroupElem> GaloisDatum::elements() const {
  std::vector<GroupElem> out{identity()};
  for (std::size_t i = gens_.size(); i-- > 0;) {
    std::vector<GroupElem> next;
    for (std::uint32_t k = 0; k < gens_[i].order; ++k)
      for (auto e : out) {
        e[i] = k;
        next.push_back(e);
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string GaloisDatum::element_name(const GroupElem& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (a[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << gens_[i].name;
    if (a[i] > 1) os << '^' << a[i];
  }
  return first ? "id" : os.str();
}

GroupElem GaloisDatum::parse_element(const std::string& text) const {
  GroupElem r = identity();
  if (text == "id") return r;
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, '*')) {
    std::uint32_t e = 1;
    std::string name = part;
    if (auto pos = part.find('^'); pos != std::string::npos) {
      name = part.substr(0, pos);
      try {
        e = static_cast<std::uint32_t>(std::stoul(part.substr(pos + 1)));
      } catch (const std::exception&) {
        fail(ErrorCode::InvalidArgument, "bad exponent in group element '" + text + "'");
      }
    }
    std::size_t i = 0;
    while (i < gens_.size() && gens_[i].name != name) ++i;
    if (i == gens_.size()) fail(ErrorCode::InvalidArgument, "unknown group generator '" + name + "'");
    r[i] = (r[i] + e) % gens_[i].order;
  }
  return r;
}

ExtElem GaloisDatum::apply_generator(std::size_t i, const ExtElem& a) const {
  check_same_field(a, field_->zero());
  if (a.is_rational()) return a;
  ExtElem r = field_->zero();
  const auto& pw = image_powers_[i];
  for (std::size_t k = 0; k < a.coords().size(); ++k)
    if (!a.coord(k).is_zero()) r += pw[k].scaled(a.coord(k));
  return r;
}

ExtElem GaloisDatum::apply(const GroupElem& s, const ExtElem& a) const {
  ExtElem r = a;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::uint32_t k = 0; k < s[i] % gens_[i].order; ++k) r = apply_generator(i, r);
  return r;
}

bool GaloisDatum::is_cyclic() const noexcept {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (std::gcd(gens_[i].order, gens_[j].order) != 1) return false;
  return true;
}

GroupElem GaloisDatum::cyclic_generator() const {
  if (!is_cyclic()) fail(ErrorCode::NonCyclicGroup, "Galois group is not cyclic");
  GroupElem g(gens_.size());
  for (std::size_t i = 0; i < gens_.size(); ++i) g[i] = gens_[i].order > 1 ? 1 : 0;
  return g;
}

}  // namespace dforge
