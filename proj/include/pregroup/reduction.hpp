#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pregroup/types.hpp"

namespace pregroup {

/// A contraction between positions `left < right` of the input type.
struct Link {
  std::size_t left = 0;
  std::size_t right = 0;

  friend bool operator==(const Link&, const Link&) = default;
  friend auto operator<=>(const Link&, const Link&) = default;
};

/// Proof that a type reduces: contraction links plus the unlinked positions,
/// whose types read left to right are below the target.
///
/// Links are kept sorted. Two witnesses are the same reduction iff their link
/// sets agree; ordering is lexicographic on the sorted link lists.
struct ReductionWitness {
  std::vector<Link> links;
  std::vector<std::size_t> residue;

  std::size_t input_size() const noexcept { return 2 * links.size() + residue.size(); }

  friend bool operator==(const ReductionWitness& a, const ReductionWitness& b) {
    return a.links == b.links;
  }
  friend std::strong_ordering operator<=>(const ReductionWitness& a, const ReductionWitness& b) {
    return a.links <=> b.links;
  }
};

inline constexpr std::size_t kDefaultReductionLimit = 1024;

/// Some witness reducing `input` to `target` (the empty target is the unit),
/// or nullopt when none exists. Throws UnknownAtomError.
std::optional<ReductionWitness> reduce(const CompoundType& input, const CompoundType& target,
                                       const AtomTable& table);

/// Every distinct witness up to `limit`, ordered lexicographically by links.
std::vector<ReductionWitness> enumerate_reductions(const CompoundType& input,
                                                   const CompoundType& target,
                                                   const AtomTable& table,
                                                   std::size_t limit = kDefaultReductionLimit);

/// Number of distinct witnesses, saturating at SIZE_MAX.
std::size_t count_reductions(const CompoundType& input, const CompoundType& target,
                             const AtomTable& table);

inline constexpr std::size_t kOracleMaxLength = 12;

/// Brute-force reference: applies adjacent contractions in every order and
/// keeps each reachable form matching `target`. Throws Error when the input
/// is longer than kOracleMaxLength.
std::vector<ReductionWitness> oracle_reduce(const CompoundType& input, const CompoundType& target,
                                            const AtomTable& table);

/// No two links cross: never i < i' < j < j'.
bool is_planar(const ReductionWitness& w);

/// Empty when `w` is a valid reduction of `input` to `target`; otherwise the
/// reasons it is not.
std::vector<std::string> witness_problems(const CompoundType& input, const CompoundType& target,
                                          const ReductionWitness& w, const AtomTable& table);

enum class DiagramFormat { Text, Dot };

/// Under-bracket drawing of a reduction. Throws Error when `w` does not fit
/// `input`.
std::string render_diagram(const CompoundType& input, const ReductionWitness& w,
                           DiagramFormat format);

}  // namespace pregroup
