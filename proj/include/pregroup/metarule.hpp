#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pregroup/types.hpp"

namespace pregroup {

/// `X^r Y^r H ...` also has type `Y^r X^r H ...` when X and Y are distinct
/// case atoms and H is a plain sentence-head atom.
struct ArgumentSwap {
  std::vector<std::string> cases;
  std::vector<std::string> heads;
};

/// Every plain occurrence of `atom` may be replaced by `expansion`.
struct AtomExpansion {
  std::string atom;
  CompoundType expansion;
};

enum class FlipDirection { Forward, Backward, Both };

/// Forward: `H X^l` becomes `X^r H`. Backward: the reverse. H is a plain
/// head atom and X one of `slots`; the pair may occur anywhere in the type.
struct SlotFlip {
  std::vector<std::string> heads;
  std::vector<std::string> slots;
  FlipDirection direction = FlipDirection::Both;
};

struct Metarule {
  std::string name;
  std::variant<ArgumentSwap, AtomExpansion, SlotFlip> rule;

  std::string_view kind() const;
  /// All types obtained by one application, forward rewrites before backward
  /// ones, each group ordered by position.
  std::vector<CompoundType> rewrites(const CompoundType& t) const;
  /// Atoms the rule mentions; used to validate against a table.
  std::vector<std::string> atoms() const;
};

inline constexpr int kMetaruleDepth = 3;

/// `base` followed by everything reachable in at most `max_depth` rounds of
/// single rewrites, without duplicates, in discovery order.
std::vector<CompoundType> metarule_closure(const std::vector<CompoundType>& base,
                                           std::span<const Metarule> rules,
                                           int max_depth = kMetaruleDepth);

}  // namespace pregroup
