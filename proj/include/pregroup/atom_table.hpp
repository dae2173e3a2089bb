#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pregroup {

/// A basic grammatical type such as `n`, `s1` or `o2`.
struct Atom {
  std::string name;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// Atoms of a free pregroup together with the partial order generated by
/// `order_pairs` (each pair reads lesser <= greater).
class AtomTable {
 public:
  using OrderPair = std::pair<std::string, std::string>;

  AtomTable() = default;
  /// Throws ValidationError listing every bad name, duplicate or cycle.
  AtomTable(std::vector<std::string> atoms, std::vector<OrderPair> order_pairs);

  /// Returns all problems with the given data; empty means it is a valid table.
  static std::vector<std::string> validate(const std::vector<std::string>& atoms,
                                           const std::vector<OrderPair>& order_pairs);
  static bool valid_name(std::string_view name);

  bool contains(std::string_view name) const;
  /// Throws UnknownAtomError.
  std::size_t index_of(std::string_view name) const;
  /// Reflexive-transitive closure lookup. Throws UnknownAtomError.
  bool leq(std::string_view lesser, std::string_view greater) const;

  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const std::vector<OrderPair>& order_pairs() const noexcept { return order_pairs_; }
  std::size_t size() const noexcept { return atoms_.size(); }

 private:
  std::vector<std::string> atoms_;
  std::vector<OrderPair> order_pairs_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<bool> closure_;  // row-major size() x size()
};

bool atom_leq(const Atom& a, const Atom& b, const AtomTable& table);

}  // namespace pregroup
