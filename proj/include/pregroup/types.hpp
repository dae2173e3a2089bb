#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pregroup/atom_table.hpp"

namespace pregroup {

/// An atom raised to an iterated adjoint. Exponent 0 is the plain atom, each
/// left adjoint subtracts one and each right adjoint adds one, so `n^l^l`
/// has exponent -2. `beta` marks the type as wrapped by the modality.
struct SimpleType {
  Atom atom;
  int exponent = 0;
  bool beta = false;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

SimpleType left_adjoint(SimpleType x);
SimpleType right_adjoint(SimpleType x);
/// Applies `times` right adjoints (left adjoints when negative).
SimpleType iterate_adjoint(SimpleType x, int times);

/// Juxtaposition of simple types; the empty sequence is the monoid unit.
class CompoundType {
 public:
  using value_type = SimpleType;
  using const_iterator = std::vector<SimpleType>::const_iterator;

  CompoundType() = default;
  explicit CompoundType(std::vector<SimpleType> parts) : parts_(std::move(parts)) {}
  CompoundType(std::initializer_list<SimpleType> parts) : parts_(parts) {}

  const std::vector<SimpleType>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  const SimpleType& operator[](std::size_t i) const { return parts_[i]; }
  const_iterator begin() const noexcept { return parts_.begin(); }
  const_iterator end() const noexcept { return parts_.end(); }

  void push_back(SimpleType x) { parts_.push_back(std::move(x)); }
  CompoundType& operator+=(const CompoundType& other);

  friend bool operator==(const CompoundType&, const CompoundType&) = default;
  friend auto operator<=>(const CompoundType&, const CompoundType&) = default;

 private:
  std::vector<SimpleType> parts_;
};

/// Monoid product.
CompoundType operator+(CompoundType a, const CompoundType& b);

/// (xy)^l = y^l x^l
CompoundType left_adjoint(const CompoundType& t);
/// (xy)^r = y^r x^r
CompoundType right_adjoint(const CompoundType& t);
CompoundType iterate_adjoint(const CompoundType& t, int times);

/// A type split into k >= 1 distinguished segments.
struct BracedType {
  std::vector<CompoundType> segments;

  std::size_t k() const noexcept { return segments.size(); }
  CompoundType flatten() const;

  friend bool operator==(const BracedType&, const BracedType&) = default;
};

/// Order between simple types of equal exponent and tag; odd exponents flip
/// the atom order.
bool simple_leq(const SimpleType& x, const SimpleType& y, const AtomTable& table);

/// Whether the adjacent pair `x y` contracts to the unit.
bool contracts(const SimpleType& x, const SimpleType& y, const AtomTable& table);

/// Pointwise simple_leq with equal lengths.
bool compound_leq(const CompoundType& x, const CompoundType& y, const AtomTable& table);

std::string render(const SimpleType& x);
std::string render(const CompoundType& t);
std::string render(const BracedType& t);

/// Result of parsing a type string: `<` `>` groups produce a BracedType.
using ParsedType = std::variant<CompoundType, BracedType>;

/// Throws ParseError on malformed input and UnknownAtomError (wrapped as a
/// ParseError with position) for atoms missing from `table`.
ParsedType parse_type(std::string_view text, const AtomTable& table);
/// Parses without checking atoms against a table.
ParsedType parse_type_unchecked(std::string_view text);

/// Rejects braces.
CompoundType parse_compound(std::string_view text, const AtomTable& table);
/// Accepts both forms; an unbraced string becomes a single segment.
BracedType parse_braced(std::string_view text, const AtomTable& table);
SimpleType parse_simple(std::string_view text, const AtomTable& table);

/// Throws UnknownAtomError for the first atom of `t` missing from `table`.
void check_atoms(const CompoundType& t, const AtomTable& table);

}  // namespace pregroup
