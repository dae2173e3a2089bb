#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pregroup/functor.hpp"
#include "pregroup/reduction.hpp"
#include "pregroup/tensor.hpp"

namespace pregroup {

/// Dimension per atom; every adjoint of an atom shares its space.
class SpaceAssignment {
 public:
  SpaceAssignment() = default;
  explicit SpaceAssignment(std::map<std::string, std::size_t, std::less<>> dims) : dims_(std::move(dims)) {}

  /// Throws ShapeError for missing or zero dimensions, or when two
  /// order-related atoms differ.
  void validate(const AtomTable& table) const;
  /// Throws ShapeError for unknown atoms.
  std::size_t dim(std::string_view atom) const;
  std::vector<std::size_t> shape_of(const CompoundType& t) const;
  const auto& dims() const noexcept { return dims_; }
  void set(const std::string& atom, std::size_t d) { dims_[atom] = d; }

 private:
  std::map<std::string, std::size_t, std::less<>> dims_;
};

struct WordTensor {
  std::string word;
  CompoundType type;
  Tensor data;
};

/// The pairing <u, v> on a space of dimension `dim`.
double epsilon(const Tensor& u, const Tensor& v);
/// Identity pairing tensor, dim x dim.
Tensor eta(std::size_t dim);

/// Contracts every link of `w` over the juxtaposed word tensors. Residue axes
/// come out in input order. `link_order` permutes link processing (empty
/// means the witness order); the result does not depend on it up to
/// rounding.
Tensor interpret(const ReductionWitness& w, std::span<const WordTensor> tensors, const SpaceAssignment& spaces,
                 std::span<const std::size_t> link_order = {});

/// Component maps of a natural transformation, keyed by source atom. Each
/// matrix is target_dim x source_dim.
struct AlphaSpec {
  std::map<std::string, Eigen::MatrixXd, std::less<>> component_maps;
  /// Target-model tensors that replace the mapped ones for these tokens.
  std::map<std::string, WordTensor, std::less<>> word_overrides;
};

/// Maps one word tensor along the functor. Even-exponent axes go through
/// the component matrix, odd ones through its inverse transpose. When
/// `reversed`, axis order is reversed to match the image type.
WordTensor apply_alpha(const AlphaSpec& alpha, const WordTensor& t, const CompoundType& image_type,
                       bool reversed);

/// Maps the axes of a residue tensor whose axes carry `types` in order.
Tensor apply_alpha_axes(const AlphaSpec& alpha, const Tensor& t, std::span<const SimpleType> types);

/// Random diagonally dominant (hence invertible) matrices, one per
/// order-connected class of atoms, so that related atoms share a component.
AlphaSpec random_alpha(const AtomTable& table, const SpaceAssignment& spaces, std::uint64_t seed);
AlphaSpec identity_alpha(const AtomTable& table, const SpaceAssignment& spaces);

/// Target-model dimensions induced by pushing `spaces` through `f`. Throws
/// ShapeError when two source atoms with different dimensions share an image.
SpaceAssignment image_spaces(const FunctorSpec& f, const SpaceAssignment& spaces);

struct NaturalityReport {
  double residual = 0;
  double tolerance = 0;
  Tensor lhs;
  Tensor rhs;
  bool ok() const noexcept { return residual <= tolerance; }
};

/// Compares alpha(interpret source) against interpret(alpha of each word) in
/// the target. `segment_sizes` groups the source words into braces (empty
/// means one segment). Throws ShapeError when `tgt_witness` is not the image
/// of `src_witness` or when an atom's image is not a single simple type.
NaturalityReport check_naturality(const AlphaSpec& alpha, const ReductionWitness& src_witness,
                                  std::span<const WordTensor> src_tensors, const SpaceAssignment& spaces,
                                  const FunctorSpec& functor, const ReductionWitness& tgt_witness,
                                  double tolerance, std::span<const std::size_t> segment_sizes = {});

/// The target witness the functor induces from `src_witness`; same
/// preconditions as check_naturality.
ReductionWitness map_witness(const FunctorSpec& functor, const ReductionWitness& src_witness,
                             std::span<const WordTensor> src_tensors,
                             std::span<const std::size_t> segment_sizes = {});

}  // namespace pregroup
