#include "pregroup/metarule.hpp"

#include <algorithm>
#include <set>

namespace pregroup {

namespace {

bool among(const std::vector<std::string>& names, const std::string& n) {
  return std::find(names.begin(), names.end(), n) != names.end();
}

std::vector<CompoundType> swap_rewrites(const ArgumentSwap& r, const CompoundType& t) {
  if (t.size() < 3) return {};
  const auto& x = t[0];
  const auto& y = t[1];
  const auto& h = t[2];
  if (x.exponent != 1 || y.exponent != 1 || x.beta || y.beta) return {};
  if (!among(r.cases, x.atom.name) || !among(r.cases, y.atom.name) || x.atom == y.atom) return {};
  if (h.exponent != 0 || !among(r.heads, h.atom.name)) return {};
  auto parts = t.parts();
  std::swap(parts[0], parts[1]);
  return {CompoundType(std::move(parts))};
}

std::vector<CompoundType> expansion_rewrites(const AtomExpansion& r, const CompoundType& t) {
  std::vector<CompoundType> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].exponent != 0 || t[i].atom.name != r.atom) continue;
    std::vector<SimpleType> parts(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
    for (auto p : r.expansion) {
      p.beta = p.beta || t[i].beta;
      parts.push_back(std::move(p));
    }
    parts.insert(parts.end(), t.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.end());
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::vector<CompoundType> flip_rewrites(const SlotFlip& r, const CompoundType& t) {
  std::vector<CompoundType> out;
  auto is_head = [&](const SimpleType& s) { return s.exponent == 0 && among(r.heads, s.atom.name); };
  auto is_slot = [&](const SimpleType& s, int e) { return s.exponent == e && among(r.slots, s.atom.name); };
  if (r.direction != FlipDirection::Backward) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      if (!is_head(t[i]) || !is_slot(t[i + 1], -1)) continue;
      auto parts = t.parts();
      parts[i] = iterate_adjoint(t[i + 1], 2);
      parts[i + 1] = t[i];
      out.emplace_back(std::move(parts));
    }
  }
  if (r.direction != FlipDirection::Forward) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      if (!is_slot(t[i], 1) || !is_head(t[i + 1])) continue;
      auto parts = t.parts();
      parts[i] = t[i + 1];
      parts[i + 1] = iterate_adjoint(t[i], -2);
      out.emplace_back(std::move(parts));
    }
  }
  return out;
}

}  // namespace

std::string_view Metarule::kind() const {
  switch (rule.index()) {
    case 0: return "argument-swap";
    case 1: return "atom-expansion";
    default: return "slot-flip";
  }
}

std::vector<CompoundType> Metarule::rewrites(const CompoundType& t) const {
  return std::visit(
      [&](const auto& r) -> std::vector<CompoundType> {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, ArgumentSwap>) return swap_rewrites(r, t);
        else if constexpr (std::is_same_v<R, AtomExpansion>) return expansion_rewrites(r, t);
        else return flip_rewrites(r, t);
      },
      rule);
}

std::vector<std::string> Metarule::atoms() const {
  return std::visit(
      [](const auto& r) -> std::vector<std::string> {
        using R = std::decay_t<decltype(r)>;
        std::vector<std::string> out;
        if constexpr (std::is_same_v<R, ArgumentSwap>) {
          out = r.cases;
          out.insert(out.end(), r.heads.begin(), r.heads.end());
        } else if constexpr (std::is_same_v<R, AtomExpansion>) {
          out.push_back(r.atom);
          for (const auto& p : r.expansion) out.push_back(p.atom.name);
        } else {
          out = r.heads;
          out.insert(out.end(), r.slots.begin(), r.slots.end());
        }
        return out;
      },
      rule);
}

std::vector<CompoundType> metarule_closure(const std::vector<CompoundType>& base,
                                           std::span<const Metarule> rules, int max_depth) {
  std::vector<CompoundType> result;
  std::set<CompoundType> seen;
  for (const auto& t : base)
    if (seen.insert(t).second) result.push_back(t);
  std::vector<CompoundType> frontier = result;
  for (int depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
    std::vector<CompoundType> next;
    for (const auto& t : frontier)
      for (const auto& rule : rules)
        for (auto& r : rule.rewrites(t))
          if (seen.insert(r).second) {
            result.push_back(r);
            next.push_back(std::move(r));
          }
    frontier = std::move(next);
  }
  return result;
}

}  // namespace pregroup
