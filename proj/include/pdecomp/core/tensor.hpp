#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "pdecomp/core/errors.hpp"

namespace pdecomp {

// Dense row-major tensor with value semantics. Rank is dynamic; indexing
// helpers cover the ranks used in practice (<= 4). Layout for image-like
// data is NHWC so convolution lowers to one GEMM without transposes.
template <typename T>
class TensorT {
 public:
  TensorT() = default;

  explicit TensorT(std::vector<int64_t> shape) : shape_(std::move(shape)) {
    data_.assign(numel_of(shape_), T(0));
  }

  static TensorT zeros(std::vector<int64_t> shape) {
    return TensorT(std::move(shape));
  }

  static TensorT full(std::vector<int64_t> shape, T value) {
    TensorT t(std::move(shape));
    std::fill(t.data_.begin(), t.data_.end(), value);
    return t;
  }

  static TensorT from(std::vector<int64_t> shape, std::vector<T> values) {
    if (numel_of(shape) != static_cast<int64_t>(values.size())) {
      throw ParameterError("tensor shape does not match value count");
    }
    TensorT t;
    t.shape_ = std::move(shape);
    t.data_ = std::move(values);
    return t;
  }

  const std::vector<int64_t>& shape() const { return shape_; }
  int64_t rank() const { return static_cast<int64_t>(shape_.size()); }
  int64_t dim(int64_t i) const { return shape_.at(i); }
  int64_t numel() const { return static_cast<int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  std::span<T> flat() { return std::span<T>(data_); }
  std::span<const T> flat() const { return std::span<const T>(data_); }
  std::vector<T>& vec() { return data_; }
  const std::vector<T>& vec() const { return data_; }

  T& operator[](int64_t i) { return data_[i]; }
  const T& operator[](int64_t i) const { return data_[i]; }

  T& at(int64_t i, int64_t j) {
    assert(rank() == 2);
    return data_[i * shape_[1] + j];
  }
  const T& at(int64_t i, int64_t j) const {
    assert(rank() == 2);
    return data_[i * shape_[1] + j];
  }
  T& at(int64_t i, int64_t j, int64_t k) {
    assert(rank() == 3);
    return data_[(i * shape_[1] + j) * shape_[2] + k];
  }
  const T& at(int64_t i, int64_t j, int64_t k) const {
    assert(rank() == 3);
    return data_[(i * shape_[1] + j) * shape_[2] + k];
  }
  T& at(int64_t i, int64_t j, int64_t k, int64_t l) {
    assert(rank() == 4);
    return data_[((i * shape_[1] + j) * shape_[2] + k) * shape_[3] + l];
  }
  const T& at(int64_t i, int64_t j, int64_t k, int64_t l) const {
    assert(rank() == 4);
    return data_[((i * shape_[1] + j) * shape_[2] + k) * shape_[3] + l];
  }

  // Reinterprets the same buffer under a new shape with equal element count.
  void reshape(std::vector<int64_t> shape) {
    if (numel_of(shape) != numel()) {
      throw ParameterError("reshape changes element count");
    }
    shape_ = std::move(shape);
  }

  void fill(T value) { std::fill(data_.begin(), data_.end(), value); }

  bool same_shape(const TensorT& other) const {
    return shape_ == other.shape_;
  }

  static int64_t numel_of(const std::vector<int64_t>& shape) {
    int64_t n = 1;
    for (int64_t d : shape) {
      if (d < 0) throw ParameterError("negative tensor dimension");
      n *= d;
    }
    return n;
  }

 private:
  std::vector<int64_t> shape_;
  std::vector<T> data_;
};

using Tensor = TensorT<float>;
using TensorD = TensorT<double>;

template <typename T>
std::string shape_str(const TensorT<T>& t) {
  std::string s = "[";
  for (size_t i = 0; i < t.shape().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t.shape()[i]);
  }
  return s + "]";
}

}  // namespace pdecomp
