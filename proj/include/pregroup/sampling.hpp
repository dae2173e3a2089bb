#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pregroup/types.hpp"

namespace pregroup {

/// Random types over the atoms of `table` with exponents in
/// [-max_exponent, max_exponent] and lengths in [0, max_length].
/// Deterministic in `seed` (drawn from Lcg64).
std::vector<CompoundType> random_types(const AtomTable& table, std::size_t count,
                                       std::size_t max_length, std::uint64_t seed,
                                       int max_exponent = 2, bool with_beta = true);

}  // namespace pregroup
