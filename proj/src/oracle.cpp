// Reference reducer used to cross-check the chart. It knows nothing beyond
// the rewrite rule itself: pick two neighbours in the current string, remove
// them if they contract, repeat.

#include <algorithm>
#include <set>

#include "pregroup/error.hpp"
#include "pregroup/reduction.hpp"

namespace pregroup {

namespace {

struct State {
  std::vector<std::size_t> remaining;  // original positions still present
  std::vector<Link> links;             // sorted

  friend auto operator<=>(const State&, const State&) = default;
};

}  // namespace

std::vector<ReductionWitness> oracle_reduce(const CompoundType& input, const CompoundType& target,
                                            const AtomTable& table) {
  if (input.size() > kOracleMaxLength)
    throw Error("oracle_reduce: input length " + std::to_string(input.size()) + " exceeds " +
                std::to_string(kOracleMaxLength));
  check_atoms(input, table);
  check_atoms(target, table);

  State start;
  for (std::size_t i = 0; i < input.size(); ++i) start.remaining.push_back(i);

  std::set<State> seen{start};
  std::vector<State> stack{start};
  std::set<std::vector<Link>> found;
  std::vector<ReductionWitness> out;
  while (!stack.empty()) {
    State s = std::move(stack.back());
    stack.pop_back();
    if (s.remaining.size() == target.size()) {
      bool match = true;
      for (std::size_t t = 0; t < target.size() && match; ++t)
        match = simple_leq(input[s.remaining[t]], target[t], table);
      if (match && found.insert(s.links).second) out.push_back({s.links, s.remaining});
    }
    for (std::size_t p = 0; p + 1 < s.remaining.size(); ++p) {
      const auto a = s.remaining[p];
      const auto b = s.remaining[p + 1];
      if (!contracts(input[a], input[b], table)) continue;
      State next;
      next.remaining = s.remaining;
      next.remaining.erase(next.remaining.begin() + static_cast<std::ptrdiff_t>(p),
                           next.remaining.begin() + static_cast<std::ptrdiff_t>(p) + 2);
      next.links = s.links;
      next.links.insert(std::lower_bound(next.links.begin(), next.links.end(), Link{a, b}), Link{a, b});
      if (seen.insert(next).second) stack.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pregroup
