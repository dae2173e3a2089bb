#include "pregroup/types.hpp"

#include <algorithm>

#include "pregroup/error.hpp"

namespace pregroup {

SimpleType left_adjoint(SimpleType x) {
  --x.exponent;
  return x;
}

SimpleType right_adjoint(SimpleType x) {
  ++x.exponent;
  return x;
}

SimpleType iterate_adjoint(SimpleType x, int times) {
  x.exponent += times;
  return x;
}

CompoundType& CompoundType::operator+=(const CompoundType& other) {
  parts_.insert(parts_.end(), other.parts_.begin(), other.parts_.end());
  return *this;
}

CompoundType operator+(CompoundType a, const CompoundType& b) {
  a += b;
  return a;
}

CompoundType iterate_adjoint(const CompoundType& t, int times) {
  std::vector<SimpleType> parts(t.parts().rbegin(), t.parts().rend());
  if (times % 2 == 0) parts.assign(t.parts().begin(), t.parts().end());
  for (auto& p : parts) p.exponent += times;
  return CompoundType(std::move(parts));
}

CompoundType left_adjoint(const CompoundType& t) { return iterate_adjoint(t, -1); }
CompoundType right_adjoint(const CompoundType& t) { return iterate_adjoint(t, 1); }

CompoundType BracedType::flatten() const {
  CompoundType out;
  for (const auto& s : segments) out += s;
  return out;
}

bool simple_leq(const SimpleType& x, const SimpleType& y, const AtomTable& table) {
  if (x.exponent != y.exponent || x.beta != y.beta) return false;
  return x.exponent % 2 == 0 ? atom_leq(x.atom, y.atom, table) : atom_leq(y.atom, x.atom, table);
}

bool contracts(const SimpleType& x, const SimpleType& y, const AtomTable& table) {
  if (y.exponent != x.exponent + 1 || x.beta != y.beta) return false;
  return x.exponent % 2 == 0 ? atom_leq(x.atom, y.atom, table) : atom_leq(y.atom, x.atom, table);
}

bool compound_leq(const CompoundType& x, const CompoundType& y, const AtomTable& table) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!simple_leq(x[i], y[i], table)) return false;
  return true;
}

std::string render(const SimpleType& x) {
  std::string out = x.beta ? "b(" + x.atom.name + ")" : x.atom.name;
  for (int i = 0; i < x.exponent; ++i) out += "^r";
  for (int i = 0; i > x.exponent; --i) out += "^l";
  return out;
}

std::string render(const CompoundType& t) {
  std::string out;
  for (const auto& p : t) {
    if (!out.empty()) out += ' ';
    out += render(p);
  }
  return out;
}

std::string render(const BracedType& t) {
  std::string out;
  for (const auto& seg : t.segments) {
    if (!out.empty()) out += ' ';
    out += seg.empty() ? "< >" : "< " + render(seg) + " >";
  }
  return out;
}

void check_atoms(const CompoundType& t, const AtomTable& table) {
  for (const auto& p : t)
    if (!table.contains(p.atom.name)) throw UnknownAtomError(p.atom.name);
}

}  // namespace pregroup
