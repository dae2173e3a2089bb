#include "pregroup/atom_table.hpp"

#include <algorithm>
#include <set>

#include "pregroup/error.hpp"

namespace pregroup {

namespace {

constexpr std::string_view kForbidden = "^()<>";

std::vector<bool> transitive_closure(std::size_t n,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<bool> reach(n * n, false);
  for (std::size_t i = 0; i < n; ++i) reach[i * n + i] = true;
  for (auto [a, b] : edges) reach[a * n + b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k * n + j]) reach[i * n + j] = true;
  return reach;
}

}  // namespace

bool AtomTable::valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f' ||
           kForbidden.find(c) != std::string_view::npos;
  });
}

std::vector<std::string> AtomTable::validate(const std::vector<std::string>& atoms,
                                             const std::vector<OrderPair>& order_pairs) {
  std::vector<std::string> problems;
  std::map<std::string, std::size_t, std::less<>> index;
  for (const auto& a : atoms) {
    if (!valid_name(a)) problems.push_back("invalid atom name '" + a + "'");
    if (!index.emplace(a, index.size()).second) problems.push_back("duplicate atom '" + a + "'");
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [lo, hi] : order_pairs) {
    auto l = index.find(lo);
    auto h = index.find(hi);
    if (l == index.end()) problems.push_back("order pair uses unknown atom '" + lo + "'");
    if (h == index.end()) problems.push_back("order pair uses unknown atom '" + hi + "'");
    if (l != index.end() && h != index.end()) edges.emplace_back(l->second, h->second);
  }
  const std::size_t n = index.size();
  auto reach = transitive_closure(n, edges);
  std::vector<std::string> by_index(n);
  for (const auto& [name, i] : index) by_index[i] = name;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (reach[i * n + j] && reach[j * n + i])
        problems.push_back("order is cyclic: '" + by_index[i] + "' and '" + by_index[j] +
                           "' are mutually below each other");
  return problems;
}

AtomTable::AtomTable(std::vector<std::string> atoms, std::vector<OrderPair> order_pairs)
    : atoms_(std::move(atoms)), order_pairs_(std::move(order_pairs)) {
  if (auto problems = validate(atoms_, order_pairs_); !problems.empty())
    throw ValidationError("atom table", std::move(problems));
  for (std::size_t i = 0; i < atoms_.size(); ++i) index_.emplace(atoms_[i], i);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [lo, hi] : order_pairs_) edges.emplace_back(index_.at(lo), index_.at(hi));
  closure_ = transitive_closure(atoms_.size(), edges);
}

bool AtomTable::contains(std::string_view name) const { return index_.find(name) != index_.end(); }

std::size_t AtomTable::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownAtomError(std::string(name));
  return it->second;
}

bool AtomTable::leq(std::string_view lesser, std::string_view greater) const {
  const auto i = index_of(lesser);
  const auto j = index_of(greater);
  return closure_[i * atoms_.size() + j];
}

bool atom_leq(const Atom& a, const Atom& b, const AtomTable& table) {
  return table.leq(a.name, b.name);
}

}  // namespace pregroup
