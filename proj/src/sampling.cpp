#include "pregroup/sampling.hpp"

#include "pregroup/lcg.hpp"

namespace pregroup {

std::vector<CompoundType> random_types(const AtomTable& table, std::size_t count,
                                       std::size_t max_length, std::uint64_t seed,
                                       int max_exponent, bool with_beta) {
  Lcg64 rng(seed);
  std::vector<CompoundType> out;
  out.reserve(count);
  const auto span = static_cast<std::uint64_t>(2 * max_exponent + 1);
  for (std::size_t c = 0; c < count; ++c) {
    CompoundType t;
    const auto len = rng.below(max_length + 1);
    for (std::uint64_t i = 0; i < len; ++i) {
      SimpleType s;
      s.atom.name = table.atoms()[rng.below(table.size())];
      s.exponent = static_cast<int>(rng.below(span)) - max_exponent;
      s.beta = with_beta && rng.below(4) == 0;
      t.push_back(std::move(s));
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace pregroup
