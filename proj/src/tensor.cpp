#include "pregroup/tensor.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace pregroup {

namespace {

std::size_t product(const std::vector<std::size_t>& shape) {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>{});
}

std::vector<std::size_t> strides(const std::vector<std::size_t>& shape) {
  std::vector<std::size_t> s(shape.size(), 1);
  for (std::size_t i = shape.size(); i-- > 1;) s[i - 1] = s[i] * shape[i];
  return s;
}

std::string shape_str(const std::vector<std::size_t>& shape) {
  std::string out = "(";
  for (std::size_t i = 0; i < shape.size(); ++i) out += (i ? "," : "") + std::to_string(shape[i]);
  return out + ")";
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> shape) : shape_(std::move(shape)), data_(product(shape_), 0.0) {}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (data_.size() != product(shape_))
    throw ShapeError("tensor of shape " + shape_str(shape_) + " needs " + std::to_string(product(shape_)) +
                     " entries, got " + std::to_string(data_.size()));
}

Tensor Tensor::vector(std::vector<double> v) {
  const std::size_t n = v.size();
  return Tensor({n}, std::move(v));
}

std::size_t Tensor::offset(std::span<const std::size_t> index) const {
  if (index.size() != shape_.size()) throw ShapeError("index rank does not match tensor rank");
  std::size_t off = 0;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i] >= shape_[i]) throw ShapeError("index out of range");
    off = off * shape_[i] + index[i];
  }
  return off;
}

double& Tensor::operator()(std::span<const std::size_t> index) { return data_[offset(index)]; }
double Tensor::operator()(std::span<const std::size_t> index) const { return data_[offset(index)]; }

Tensor Tensor::permute(std::span<const std::size_t> perm) const {
  if (perm.size() != rank()) throw ShapeError("permutation rank mismatch");
  std::vector<std::size_t> new_shape(rank());
  std::vector<bool> seen(rank(), false);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (perm[i] >= rank() || seen[perm[i]]) throw ShapeError("not a permutation");
    seen[perm[i]] = true;
    new_shape[i] = shape_[perm[i]];
  }
  const auto old_strides = strides(shape_);
  Tensor out(new_shape);
  std::size_t k = 0;
  for_each_index(new_shape, [&](std::span<const std::size_t> idx) {
    std::size_t off = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) off += idx[i] * old_strides[perm[i]];
    out.data_[k++] = data_[off];
  });
  return out;
}

Tensor Tensor::trace(std::size_t a, std::size_t b) const {
  if (a == b || a >= rank() || b >= rank()) throw ShapeError("bad trace axes");
  if (shape_[a] != shape_[b])
    throw ShapeError("cannot trace axes of sizes " + std::to_string(shape_[a]) + " and " +
                     std::to_string(shape_[b]));
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < rank(); ++i)
    if (i != a && i != b) keep.push_back(i);
  std::vector<std::size_t> new_shape;
  for (std::size_t i : keep) new_shape.push_back(shape_[i]);
  const auto st = strides(shape_);
  Tensor out(new_shape);
  std::size_t k = 0;
  for_each_index(new_shape, [&](std::span<const std::size_t> idx) {
    std::size_t base = 0;
    for (std::size_t i = 0; i < keep.size(); ++i) base += idx[i] * st[keep[i]];
    double sum = 0;
    for (std::size_t d = 0; d < shape_[a]; ++d) sum += data_[base + d * (st[a] + st[b])];
    out.data_[k++] = sum;
  });
  return out;
}

Tensor Tensor::apply_matrix(std::size_t axis, std::span<const double> m, std::size_t rows) const {
  if (axis >= rank()) throw ShapeError("bad axis");
  const std::size_t cols = shape_[axis];
  if (m.size() != rows * cols)
    throw ShapeError("matrix of " + std::to_string(m.size()) + " entries does not fit axis of size " +
                     std::to_string(cols));
  auto new_shape = shape_;
  new_shape[axis] = rows;
  Tensor out(new_shape);
  const auto out_st = strides(new_shape);
  for_each_index(shape_, [&](std::span<const std::size_t> idx) {
    const double v = data_[offset(idx)];
    if (v == 0.0) return;
    std::size_t base = 0;
    for (std::size_t i = 0; i < idx.size(); ++i)
      if (i != axis) base += idx[i] * out_st[i];
    for (std::size_t r = 0; r < rows; ++r) out.data_[base + r * out_st[axis]] += m[r * cols + idx[axis]] * v;
  });
  return out;
}

Tensor tensordot(const Tensor& x, std::size_t a, const Tensor& y, std::size_t b) {
  if (a >= x.rank() || b >= y.rank()) throw ShapeError("bad contraction axes");
  if (x.shape()[a] != y.shape()[b])
    throw ShapeError("cannot contract axes of sizes " + std::to_string(x.shape()[a]) + " and " +
                     std::to_string(y.shape()[b]));
  // Move the contracted axes to the end of x and the front of y.
  std::vector<std::size_t> px, py{b};
  for (std::size_t i = 0; i < x.rank(); ++i)
    if (i != a) px.push_back(i);
  px.push_back(a);
  for (std::size_t i = 0; i < y.rank(); ++i)
    if (i != b) py.push_back(i);
  const Tensor xs = x.permute(px);
  const Tensor ys = y.permute(py);
  const std::size_t d = x.shape()[a];
  const std::size_t m = xs.size() / d;
  const std::size_t n = ys.size() / d;
  std::vector<std::size_t> shape;
  for (std::size_t i = 0; i + 1 < px.size(); ++i) shape.push_back(xs.shape()[i]);
  for (std::size_t i = 1; i < py.size(); ++i) shape.push_back(ys.shape()[i]);
  Tensor out(shape);
  auto& o = out.data();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const double v = xs.data()[i * d + k];
      if (v == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) o[i * n + j] += v * ys.data()[k * n + j];
    }
  return out;
}

Tensor outer(const Tensor& x, const Tensor& y) {
  std::vector<std::size_t> shape = x.shape();
  shape.insert(shape.end(), y.shape().begin(), y.shape().end());
  Tensor out(shape);
  auto& o = out.data();
  const std::size_t n = y.size();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) o[i * n + j] = x.data()[i] * y.data()[j];
  return out;
}

double max_abs_diff(const Tensor& x, const Tensor& y) {
  if (x.shape() != y.shape())
    throw ShapeError("shape mismatch " + shape_str(x.shape()) + " vs " + shape_str(y.shape()));
  double worst = 0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x.data()[i] - y.data()[i]));
  return worst;
}

}  // namespace pregroup
