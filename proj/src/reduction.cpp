// Span chart over the input. A half-open span [i, j) reduces to the unit iff
// position i contracts with some k in the span whose interior (i, k) and
// remainder [k + 1, j) both reduce. The first position determines its
// partner, so distinct choices of k never yield the same link set; this
// makes counting exact and enumeration duplicate-free.

#include <algorithm>
#include <limits>
#include <map>

#include "pregroup/error.hpp"
#include "pregroup/reduction.hpp"

namespace pregroup {

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_add(std::size_t a, std::size_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

using LinkList = std::vector<Link>;

class Chart {
 public:
  Chart(const CompoundType& input, const CompoundType& target, const AtomTable& table)
      : input_(input), target_(target), n_(input.size()), m_(target.size()) {
    check_atoms(input, table);
    check_atoms(target, table);
    link_ok_.assign(n_ * n_, false);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = i + 1; k < n_; k += 2)
        link_ok_[i * n_ + k] = contracts(input[i], input[k], table);
    residue_ok_.assign(n_ * std::max<std::size_t>(m_, 1), false);
    for (std::size_t p = 0; p < n_; ++p)
      for (std::size_t t = 0; t < m_; ++t)
        residue_ok_[p * m_ + t] = simple_leq(input[p], target[t], table);

    unit_count_.assign((n_ + 1) * (n_ + 1), 0);
    for (std::size_t i = 0; i <= n_; ++i) unit_count_[span(i, i)] = 1;
    for (std::size_t len = 2; len <= n_; len += 2) {
      for (std::size_t i = 0; i + len <= n_; ++i) {
        const std::size_t j = i + len;
        std::size_t total = 0;
        for (std::size_t k = i + 1; k < j; k += 2) {
          if (!link_ok_[i * n_ + k]) continue;
          total = sat_add(total, sat_mul(unit_count_[span(i + 1, k)], unit_count_[span(k + 1, j)]));
        }
        unit_count_[span(i, j)] = total;
      }
    }

    // target_count_[t][p]: ways to match target[t..] against input[p..].
    target_count_.assign((m_ + 1) * (n_ + 1), 0);
    for (std::size_t p = 0; p <= n_; ++p) target_count_[tspan(m_, p)] = unit_count_[span(p, n_)];
    for (std::size_t t = m_; t-- > 0;) {
      for (std::size_t p = 0; p <= n_; ++p) {
        std::size_t total = 0;
        for (std::size_t r = p; r < n_; r += 2) {
          if (!residue_ok_[r * m_ + t]) continue;
          total = sat_add(total, sat_mul(unit_count_[span(p, r)], target_count_[tspan(t + 1, r + 1)]));
        }
        target_count_[tspan(t, p)] = total;
      }
    }
  }

  std::size_t count() const { return target_count_[tspan(0, 0)]; }

  std::vector<ReductionWitness> enumerate(std::size_t limit) {
    std::vector<ReductionWitness> out;
    if (limit == 0 || count() == 0) return out;
    std::vector<std::size_t> residue;
    collect(0, 0, residue, limit, out);
    std::sort(out.begin(), out.end());
    if (out.size() > limit) out.resize(limit);
    return out;
  }

 private:
  std::size_t span(std::size_t i, std::size_t j) const { return i * (n_ + 1) + j; }
  std::size_t tspan(std::size_t t, std::size_t p) const { return t * (n_ + 1) + p; }

  // Lexicographically smallest `limit` full matchings of [i, j).
  const std::vector<LinkList>& unit_matchings(std::size_t i, std::size_t j, std::size_t limit) {
    auto key = span(i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<LinkList> result;
    if (i == j) {
      result.emplace_back();
    } else if (unit_count_[key] > 0) {
      for (std::size_t k = i + 1; k < j && result.size() < limit; k += 2) {
        if (!link_ok_[i * n_ + k] || unit_count_[span(i + 1, k)] == 0 ||
            unit_count_[span(k + 1, j)] == 0)
          continue;
        const auto& inner = unit_matchings(i + 1, k, limit);
        const auto& outer = unit_matchings(k + 1, j, limit);
        for (const auto& a : inner) {
          for (const auto& b : outer) {
            LinkList links;
            links.reserve(1 + a.size() + b.size());
            links.push_back({i, k});
            links.insert(links.end(), a.begin(), a.end());
            links.insert(links.end(), b.begin(), b.end());
            result.push_back(std::move(links));
            if (result.size() >= limit) break;
          }
          if (result.size() >= limit) break;
        }
      }
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

  void collect(std::size_t t, std::size_t p, std::vector<std::size_t>& residue, std::size_t limit,
               std::vector<ReductionWitness>& out) {
    if (t == m_) {
      // Gaps between consecutive residue positions each reduce to the unit.
      std::vector<LinkList> combos{LinkList{}};
      std::size_t start = 0;
      auto extend = [&](std::size_t from, std::size_t to) {
        const auto& gap = unit_matchings(from, to, limit);
        std::vector<LinkList> next;
        for (const auto& prefix : combos) {
          for (const auto& g : gap) {
            LinkList links = prefix;
            links.insert(links.end(), g.begin(), g.end());
            next.push_back(std::move(links));
            if (next.size() >= limit) break;
          }
          if (next.size() >= limit) break;
        }
        combos = std::move(next);
      };
      for (auto r : residue) {
        extend(start, r);
        start = r + 1;
      }
      extend(start, n_);
      for (auto& links : combos) out.push_back({std::move(links), residue});
      return;
    }
    for (std::size_t r = p; r < n_; r += 2) {
      if (!residue_ok_[r * m_ + t] || unit_count_[span(p, r)] == 0 ||
          target_count_[tspan(t + 1, r + 1)] == 0)
        continue;
      residue.push_back(r);
      collect(t + 1, r + 1, residue, limit, out);
      residue.pop_back();
    }
  }

  const CompoundType& input_;
  const CompoundType& target_;
  std::size_t n_;
  std::size_t m_;
  std::vector<bool> link_ok_;
  std::vector<bool> residue_ok_;
  std::vector<std::size_t> unit_count_;
  std::vector<std::size_t> target_count_;
  std::map<std::size_t, std::vector<LinkList>> memo_;
};

}  // namespace

std::optional<ReductionWitness> reduce(const CompoundType& input, const CompoundType& target,
                                       const AtomTable& table) {
  auto all = enumerate_reductions(input, target, table, 1);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

std::vector<ReductionWitness> enumerate_reductions(const CompoundType& input,
                                                   const CompoundType& target,
                                                   const AtomTable& table, std::size_t limit) {
  if (limit == 0) throw Error("enumerate_reductions: limit must be at least 1");
  Chart chart(input, target, table);
  return chart.enumerate(limit);
}

std::size_t count_reductions(const CompoundType& input, const CompoundType& target,
                             const AtomTable& table) {
  return Chart(input, target, table).count();
}

bool is_planar(const ReductionWitness& w) {
  for (const auto& a : w.links)
    for (const auto& b : w.links)
      if (a.left < b.left && b.left < a.right && a.right < b.right) return false;
  return true;
}

std::vector<std::string> witness_problems(const CompoundType& input, const CompoundType& target,
                                          const ReductionWitness& w, const AtomTable& table) {
  std::vector<std::string> problems;
  const std::size_t n = input.size();
  if (w.input_size() != n) {
    problems.push_back("witness covers " + std::to_string(w.input_size()) + " positions, input has " +
                       std::to_string(n));
    return problems;
  }
  std::vector<int> use(n, 0);
  std::vector<std::size_t> partner(n, n);
  for (const auto& l : w.links) {
    if (l.left >= l.right || l.right >= n) {
      problems.push_back("bad link (" + std::to_string(l.left) + "," + std::to_string(l.right) + ")");
      continue;
    }
    ++use[l.left];
    ++use[l.right];
    partner[l.left] = l.right;
    if (!contracts(input[l.left], input[l.right], table))
      problems.push_back("link (" + std::to_string(l.left) + "," + std::to_string(l.right) +
                         ") does not contract");
  }
  for (auto r : w.residue) {
    if (r >= n) {
      problems.push_back("residue index out of range");
      continue;
    }
    ++use[r];
  }
  for (std::size_t i = 0; i < n; ++i)
    if (use[i] != 1) problems.push_back("position " + std::to_string(i) + " used " + std::to_string(use[i]) + " times");
  if (!problems.empty()) return problems;
  if (!is_planar(w)) problems.push_back("links cross");
  // Nothing unlinked may sit under a link.
  for (auto r : w.residue)
    for (const auto& l : w.links)
      if (l.left < r && r < l.right)
        problems.push_back("residue position " + std::to_string(r) + " is enclosed by a link");
  if (!std::is_sorted(w.residue.begin(), w.residue.end())) problems.push_back("residue not ascending");
  if (w.residue.size() != target.size()) {
    problems.push_back("residue length differs from target");
  } else {
    for (std::size_t t = 0; t < target.size(); ++t)
      if (!simple_leq(input[w.residue[t]], target[t], table))
        problems.push_back("residue " + render(input[w.residue[t]]) + " is not below " + render(target[t]));
  }
  return problems;
}

}  // namespace pregroup
