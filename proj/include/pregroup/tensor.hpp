#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "pregroup/error.hpp"

namespace pregroup {

/// Dense real tensor, row-major. Rank 0 holds one scalar.
class Tensor {
 public:
  Tensor() : data_(1, 0.0) {}
  explicit Tensor(std::vector<std::size_t> shape);
  Tensor(std::vector<std::size_t> shape, std::vector<double> data);
  static Tensor scalar(double v) { return Tensor({}, {v}); }
  static Tensor vector(std::vector<double> v);

  const std::vector<std::size_t>& shape() const noexcept { return shape_; }
  std::size_t rank() const noexcept { return shape_.size(); }
  std::size_t size() const noexcept { return data_.size(); }
  const std::vector<double>& data() const noexcept { return data_; }
  std::vector<double>& data() noexcept { return data_; }

  double& operator()(std::span<const std::size_t> index);
  double operator()(std::span<const std::size_t> index) const;
  double& at(std::initializer_list<std::size_t> index) { return (*this)({index.begin(), index.size()}); }
  double at(std::initializer_list<std::size_t> index) const { return (*this)({index.begin(), index.size()}); }
  std::size_t offset(std::span<const std::size_t> index) const;

  /// Axes reordered so that output axis i is input axis perm[i].
  Tensor permute(std::span<const std::size_t> perm) const;
  /// Sums the diagonal of two equal-sized axes.
  Tensor trace(std::size_t a, std::size_t b) const;
  /// Multiplies the matrix `m` (rows x shape[axis], row-major) into one axis.
  Tensor apply_matrix(std::size_t axis, std::span<const double> m, std::size_t rows) const;

 private:
  std::vector<std::size_t> shape_;
  std::vector<double> data_;
};

/// Contracts axis `a` of x with axis `b` of y. Result axes: x's remaining
/// axes, then y's.
Tensor tensordot(const Tensor& x, std::size_t a, const Tensor& y, std::size_t b);
Tensor outer(const Tensor& x, const Tensor& y);
/// Largest absolute entry difference; throws ShapeError on shape mismatch.
double max_abs_diff(const Tensor& x, const Tensor& y);

/// Calls `f` on every multi-index of `shape` in row-major order.
template <class F>
void for_each_index(std::span<const std::size_t> shape, F&& f) {
  std::vector<std::size_t> idx(shape.size(), 0);
  for (std::size_t d : shape)
    if (d == 0) return;
  while (true) {
    f(std::span<const std::size_t>(idx));
    std::size_t i = shape.size();
    while (i > 0) {
      --i;
      if (++idx[i] < shape[i]) break;
      idx[i] = 0;
      if (i == 0) return;
    }
    if (shape.empty()) return;
  }
}

}  // namespace pregroup
