#include "pregroup/semantics.hpp"

#include <algorithm>
#include <numeric>

#include "pregroup/lcg.hpp"
#include "pregroup/translate.hpp"

namespace pregroup {

void SpaceAssignment::validate(const AtomTable& table) const {
  for (const auto& a : table.atoms()) {
    auto it = dims_.find(a);
    if (it == dims_.end()) throw ShapeError("no dimension for atom '" + a + "'");
    if (it->second == 0) throw ShapeError("atom '" + a + "' has dimension 0");
  }
  for (const auto& [lo, hi] : table.order_pairs())
    if (dim(lo) != dim(hi))
      throw ShapeError("ordered atoms '" + lo + "' and '" + hi + "' have different dimensions");
}

std::size_t SpaceAssignment::dim(std::string_view atom) const {
  auto it = dims_.find(atom);
  if (it == dims_.end()) throw ShapeError("no dimension for atom '" + std::string(atom) + "'");
  return it->second;
}

std::vector<std::size_t> SpaceAssignment::shape_of(const CompoundType& t) const {
  std::vector<std::size_t> out;
  for (const auto& x : t) out.push_back(dim(x.atom.name));
  return out;
}

double epsilon(const Tensor& u, const Tensor& v) {
  if (u.rank() != 1 || v.rank() != 1 || u.size() != v.size())
    throw ShapeError("epsilon needs two vectors of equal dimension");
  return tensordot(u, 0, v, 0).data()[0];
}

Tensor eta(std::size_t dim) {
  if (dim == 0) throw ShapeError("eta needs a positive dimension");
  Tensor out({dim, dim});
  for (std::size_t i = 0; i < dim; ++i) out.at({i, i}) = 1.0;
  return out;
}

namespace {

struct Piece {
  Tensor t;
  std::vector<std::size_t> labels;  // input position of each axis
};

std::size_t axis_of(const Piece& p, std::size_t label) {
  return static_cast<std::size_t>(std::find(p.labels.begin(), p.labels.end(), label) - p.labels.begin());
}

}  // namespace

Tensor interpret(const ReductionWitness& w, std::span<const WordTensor> tensors, const SpaceAssignment& spaces,
                 std::span<const std::size_t> link_order) {
  std::vector<Piece> pieces;
  std::vector<std::size_t> owner;
  CompoundType flat;
  for (const auto& wt : tensors) {
    if (wt.data.shape() != spaces.shape_of(wt.type))
      throw ShapeError("tensor for '" + wt.word + "' does not match type " + render(wt.type));
    Piece p{wt.data, {}};
    for (std::size_t k = 0; k < wt.type.size(); ++k) {
      p.labels.push_back(flat.size() + k);
      owner.push_back(pieces.size());
    }
    flat += wt.type;
    pieces.push_back(std::move(p));
  }
  if (w.input_size() != flat.size())
    throw ShapeError("witness covers " + std::to_string(w.input_size()) + " positions but the words have " +
                     std::to_string(flat.size()));

  std::vector<std::size_t> order(w.links.size());
  if (link_order.empty()) {
    std::iota(order.begin(), order.end(), std::size_t{0});
  } else {
    if (link_order.size() != order.size()) throw ShapeError("link order has the wrong length");
    order.assign(link_order.begin(), link_order.end());
  }

  std::vector<bool> alive(pieces.size(), true);
  for (std::size_t li : order) {
    const Link& l = w.links.at(li);
    if (l.right >= flat.size()) throw ShapeError("link outside the input");
    const std::size_t pa = owner[l.left], pb = owner[l.right];
    if (pa == pb) {
      Piece& p = pieces[pa];
      const std::size_t a = axis_of(p, l.left), b = axis_of(p, l.right);
      p.t = p.t.trace(a, b);
      p.labels.erase(p.labels.begin() + std::max(a, b));
      p.labels.erase(p.labels.begin() + std::min(a, b));
    } else {
      Piece& x = pieces[pa];
      Piece& y = pieces[pb];
      const std::size_t a = axis_of(x, l.left), b = axis_of(y, l.right);
      Piece merged{tensordot(x.t, a, y.t, b), {}};
      for (std::size_t i = 0; i < x.labels.size(); ++i)
        if (i != a) merged.labels.push_back(x.labels[i]);
      for (std::size_t i = 0; i < y.labels.size(); ++i)
        if (i != b) merged.labels.push_back(y.labels[i]);
      for (std::size_t i = 0; i < owner.size(); ++i)
        if (owner[i] == pb) owner[i] = pa;
      x = std::move(merged);
      alive[pb] = false;
    }
  }

  Piece result{Tensor::scalar(1.0), {}};
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!alive[i]) continue;
    result.t = outer(result.t, pieces[i].t);
    result.labels.insert(result.labels.end(), pieces[i].labels.begin(), pieces[i].labels.end());
  }
  std::vector<std::size_t> perm(result.labels.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](auto a, auto b) { return result.labels[a] < result.labels[b]; });
  return result.t.permute(perm);
}

namespace {

std::vector<double> row_major(const Eigen::MatrixXd& m) {
  std::vector<double> out(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out[static_cast<std::size_t>(r * m.cols() + c)] = m(r, c);
  return out;
}

Eigen::MatrixXd axis_matrix(const AlphaSpec& alpha, const SimpleType& x) {
  auto it = alpha.component_maps.find(x.atom.name);
  if (it == alpha.component_maps.end()) throw ShapeError("no component map for atom '" + x.atom.name + "'");
  if (x.exponent % 2 == 0) return it->second;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(it->second);
  if (it->second.rows() != it->second.cols() || !lu.isInvertible())
    throw ShapeError("component map for '" + x.atom.name + "' is not invertible");
  return lu.inverse().transpose();
}

}  // namespace

Tensor apply_alpha_axes(const AlphaSpec& alpha, const Tensor& t, std::span<const SimpleType> types) {
  if (types.size() != t.rank()) throw ShapeError("axis count does not match type length");
  Tensor out = t;
  for (std::size_t k = 0; k < types.size(); ++k) {
    const auto m = axis_matrix(alpha, types[k]);
    out = out.apply_matrix(k, row_major(m), static_cast<std::size_t>(m.rows()));
  }
  return out;
}

WordTensor apply_alpha(const AlphaSpec& alpha, const WordTensor& t, const CompoundType& image_type,
                       bool reversed) {
  if (auto it = alpha.word_overrides.find(t.word); it != alpha.word_overrides.end()) {
    if (it->second.type != image_type)
      throw ShapeError("override for '" + t.word + "' has type " + render(it->second.type) + ", expected " +
                       render(image_type));
    return it->second;
  }
  if (image_type.size() != t.type.size())
    throw ShapeError("image " + render(image_type) + " of '" + t.word + "' does not have one axis per axis");
  Tensor data = apply_alpha_axes(alpha, t.data, t.type.parts());
  if (reversed) {
    std::vector<std::size_t> perm(data.rank());
    std::iota(perm.rbegin(), perm.rend(), std::size_t{0});
    data = data.permute(perm);
  }
  return {t.word, image_type, std::move(data)};
}

namespace {

std::vector<std::size_t> connected_classes(const AtomTable& table) {
  std::vector<std::size_t> parent(table.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [lo, hi] : table.order_pairs()) {
    const auto a = find(table.index_of(lo)), b = find(table.index_of(hi));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> out(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) out[i] = find(i);
  return out;
}

}  // namespace

AlphaSpec random_alpha(const AtomTable& table, const SpaceAssignment& spaces, std::uint64_t seed) {
  Lcg64 rng(seed);
  const auto cls = connected_classes(table);
  std::map<std::size_t, Eigen::MatrixXd> by_class;
  AlphaSpec alpha;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& atom = table.atoms()[i];
    auto it = by_class.find(cls[i]);
    if (it == by_class.end()) {
      const auto d = static_cast<Eigen::Index>(spaces.dim(atom));
      Eigen::MatrixXd m(d, d);
      for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c) m(r, c) = rng.symmetric() + (r == c ? static_cast<double>(d) : 0.0);
      it = by_class.emplace(cls[i], std::move(m)).first;
    }
    alpha.component_maps[atom] = it->second;
  }
  return alpha;
}

AlphaSpec identity_alpha(const AtomTable& table, const SpaceAssignment& spaces) {
  AlphaSpec alpha;
  for (const auto& a : table.atoms()) {
    const auto d = static_cast<Eigen::Index>(spaces.dim(a));
    alpha.component_maps[a] = Eigen::MatrixXd::Identity(d, d);
  }
  return alpha;
}

SpaceAssignment image_spaces(const FunctorSpec& f, const SpaceAssignment& spaces) {
  SpaceAssignment out;
  for (const auto& [key, image] : f.atom_map) {
    if (key.second != 0 || !spaces.dims().contains(key.first)) continue;
    const std::size_t d = spaces.dim(key.first);
    for (const auto& x : image) {
      auto it = out.dims().find(x.atom.name);
      if (it != out.dims().end() && it->second != d)
        throw ShapeError("atoms mapping to '" + x.atom.name + "' have different dimensions");
      out.set(x.atom.name, d);
    }
  }
  return out;
}

namespace {

struct Layout {
  std::vector<WordPlacement> placement;
  std::vector<CompoundType> images;     // per source word
  std::vector<std::size_t> target_pos;  // per source position
};

Layout layout_of(const FunctorSpec& f, std::span<const WordTensor> words, std::span<const std::size_t> sizes) {
  std::vector<std::size_t> seg(sizes.begin(), sizes.end());
  if (seg.empty()) seg.push_back(words.size());
  Layout L;
  L.placement = place_words(f, seg);
  if (L.placement.size() != words.size()) throw ShapeError("segment sizes do not cover the words");
  for (std::size_t i = 0; i < words.size(); ++i) {
    L.images.push_back(map_type(f, words[i].type, L.placement[i].reversed));
    if (L.images.back().size() != words[i].type.size())
      throw ShapeError("image of '" + words[i].word + "' is not one simple type per simple type");
  }
  // Start of each word in the target sentence.
  std::vector<std::size_t> by_target(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) by_target[L.placement[i].target_index] = i;
  std::vector<std::size_t> start(words.size());
  std::size_t pos = 0;
  for (std::size_t t = 0; t < words.size(); ++t) {
    start[by_target[t]] = pos;
    pos += words[by_target[t]].type.size();
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::size_t len = words[i].type.size();
    for (std::size_t k = 0; k < len; ++k)
      L.target_pos.push_back(start[i] + (L.placement[i].reversed ? len - 1 - k : k));
  }
  return L;
}

ReductionWitness mapped(const Layout& L, const ReductionWitness& w) {
  ReductionWitness out;
  for (const auto& l : w.links) {
    if (l.right >= L.target_pos.size()) throw ShapeError("witness does not fit the words");
    auto a = L.target_pos[l.left], b = L.target_pos[l.right];
    out.links.push_back({std::min(a, b), std::max(a, b)});
  }
  for (auto r : w.residue) out.residue.push_back(L.target_pos.at(r));
  std::sort(out.links.begin(), out.links.end());
  std::sort(out.residue.begin(), out.residue.end());
  return out;
}

}  // namespace

ReductionWitness map_witness(const FunctorSpec& functor, const ReductionWitness& src_witness,
                             std::span<const WordTensor> src_tensors, std::span<const std::size_t> segment_sizes) {
  return mapped(layout_of(functor, src_tensors, segment_sizes), src_witness);
}

NaturalityReport check_naturality(const AlphaSpec& alpha, const ReductionWitness& src_witness,
                                  std::span<const WordTensor> src_tensors, const SpaceAssignment& spaces,
                                  const FunctorSpec& functor, const ReductionWitness& tgt_witness,
                                  double tolerance, std::span<const std::size_t> segment_sizes) {
  const Layout L = layout_of(functor, src_tensors, segment_sizes);
  const auto expected = mapped(L, src_witness);
  if (expected.links != tgt_witness.links || expected.residue != tgt_witness.residue)
    throw ShapeError("target witness is not the image of the source witness");

  NaturalityReport report;
  report.tolerance = tolerance;

  // Interpret, then translate the residue.
  CompoundType flat;
  for (const auto& w : src_tensors) flat += w.type;
  std::vector<SimpleType> residue_types;
  for (auto r : src_witness.residue) residue_types.push_back(flat[r]);
  Tensor lhs = apply_alpha_axes(alpha, interpret(src_witness, src_tensors, spaces), residue_types);
  std::vector<std::size_t> perm(src_witness.residue.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](auto a, auto b) {
    return L.target_pos[src_witness.residue[a]] < L.target_pos[src_witness.residue[b]];
  });
  report.lhs = lhs.permute(perm);

  // Translate each word, then interpret in the target.
  std::vector<WordTensor> mapped_words(src_tensors.size());
  for (std::size_t i = 0; i < src_tensors.size(); ++i)
    mapped_words[L.placement[i].target_index] =
        apply_alpha(alpha, src_tensors[i], L.images[i], L.placement[i].reversed);
  // Same link order as the source side, so identical inputs sum identically.
  std::vector<std::size_t> order;
  for (const auto& l : src_witness.links) {
    const auto a = L.target_pos[l.left], b = L.target_pos[l.right];
    const Link image{std::min(a, b), std::max(a, b)};
    order.push_back(static_cast<std::size_t>(
        std::lower_bound(tgt_witness.links.begin(), tgt_witness.links.end(), image) - tgt_witness.links.begin()));
  }
  report.rhs = interpret(tgt_witness, mapped_words, image_spaces(functor, spaces), order);
  report.residual = max_abs_diff(report.lhs, report.rhs);
  return report;
}

}  // namespace pregroup
