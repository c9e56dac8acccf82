#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dforge/ext_field.hpp"

namespace dforge {

struct GaloisGenerator {
  std::string name;
  ExtElem image;  // s(x)
  std::uint32_t order;
};

/// An element of the finite abelian group as exponents of the generators.
using GroupElem = std::vector<std::uint32_t>;

/// A finite abelian group of automorphisms of K/Q, presented as the direct
/// product of the cyclic groups generated by the listed generators.
///
/// Construction checks that each image is a root of f, that each generator
/// has exactly the declared order, that generators commute, and that the
/// presentation is faithful (distinct exponent vectors act differently).
/// Violations raise InvalidAutomorphism.
class GaloisDatum {
 public:
  GaloisDatum(ExtFieldPtr field, std::vector<GaloisGenerator> generators);
  /// The trivial group acting on K.
  static GaloisDatum trivial(ExtFieldPtr field);

  const ExtField& field() const noexcept { return *field_; }
  const ExtFieldPtr& field_ptr() const noexcept { return field_; }
  const std::vector<GaloisGenerator>& generators() const noexcept { return gens_; }
  std::size_t num_generators() const noexcept { return gens_.size(); }
  std::uint64_t group_order() const noexcept;

  GroupElem identity() const { return GroupElem(gens_.size(), 0); }
  GroupElem generator(std::size_t i) const;
  GroupElem compose(const GroupElem& a, const GroupElem& b) const;
  GroupElem inverse(const GroupElem& a) const;
  bool is_identity(const GroupElem& a) const noexcept;
  /// All elements in lexicographic exponent order, identity first.
  std::vector<GroupElem> elements() const;
  /// "id", "s", "s^2*t", ...
  std::string element_name(const GroupElem& a) const;
  /// Inverse of element_name; throws InvalidArgument on unknown text.
  GroupElem parse_element(const std::string& text) const;

  /// s(a) for the i-th generator.
  ExtElem apply_generator(std::size_t i, const ExtElem& a) const;
  ExtElem apply(const GroupElem& s, const ExtElem& a) const;
  /// Image of x under s.
  ExtElem image_of_gen(const GroupElem& s) const { return apply(s, field_->gen()); }

  /// The group is cyclic iff the generator orders are pairwise coprime; then
  /// the product of the generators generates it.
  bool is_cyclic() const noexcept;
  GroupElem cyclic_generator() const;

 private:
  ExtFieldPtr field_;
  std::vector<GaloisGenerator> gens_;
  std::vector<std::vector<ExtElem>> image_powers_;  // s_i(x)^k for k < e
};

}  // namespace dforge
