#pragma once

// Dense row-major double tensor. Autodiff ops treat tensors as 2-D matrices
// (dim 0 = rows, remaining dims flattened into columns); higher-rank shapes
// are bookkeeping for dataset/episode storage.

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace casa {

class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
    data_.assign(compute_numel(shape_), 0.0);
  }

  static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }

  static Tensor full(std::vector<int> shape, double v) {
    Tensor t(std::move(shape));
    for (auto& x : t.data_) x = v;
    return t;
  }

  static Tensor from_values(std::vector<int> shape, std::vector<double> values) {
    Tensor t;
    t.shape_ = std::move(shape);
    if (static_cast<std::size_t>(compute_numel(t.shape_)) != values.size())
      throw std::invalid_argument("Tensor::from_values: shape/value count mismatch");
    t.data_ = std::move(values);
    return t;
  }

  int ndim() const { return static_cast<int>(shape_.size()); }
  const std::vector<int>& shape() const { return shape_; }
  int dim(int i) const { return shape_.at(static_cast<std::size_t>(i)); }
  int numel() const { return static_cast<int>(data_.size()); }
  bool empty() const { return data_.empty(); }

  // 2-D view: rows = dim 0, cols = product of remaining dims.
  int rows() const { return shape_.empty() ? 0 : shape_[0]; }
  int cols() const {
    if (shape_.empty()) return 0;
    int c = 1;
    for (std::size_t i = 1; i < shape_.size(); ++i) c *= shape_[i];
    return c;
  }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  double& operator[](int i) { return data_[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return data_[static_cast<std::size_t>(i)]; }

  double& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols() + j]; }
  double at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols() + j]; }

  double& at4(int a, int b, int c, int d) {
    assert(ndim() == 4);
    return data_[((static_cast<std::size_t>(a) * shape_[1] + b) * shape_[2] + c) * shape_[3] + d];
  }
  double at4(int a, int b, int c, int d) const {
    return const_cast<Tensor*>(this)->at4(a, b, c, d);
  }
  double& at3(int a, int b, int c) {
    assert(ndim() == 3);
    return data_[(static_cast<std::size_t>(a) * shape_[1] + b) * shape_[2] + c];
  }
  double at3(int a, int b, int c) const { return const_cast<Tensor*>(this)->at3(a, b, c); }

  void fill(double v) {
    for (auto& x : data_) x = v;
  }

  Tensor reshaped(std::vector<int> shape) const {
    if (compute_numel(shape) != numel())
      throw std::invalid_argument("Tensor::reshaped: element count mismatch");
    Tensor t = *this;
    t.shape_ = std::move(shape);
    return t;
  }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

  bool all_finite() const;
  double max_abs_diff(const Tensor& o) const;

  std::string shape_str() const;

 private:
  static int compute_numel(const std::vector<int>& shape) {
    int n = shape.empty() ? 0 : 1;
    for (int d : shape) {
      if (d < 0) throw std::invalid_argument("Tensor: negative dimension");
      n *= d;
    }
    return n;
  }

  std::vector<double> data_;
  std::vector<int> shape_;
};

}  // namespace casa
