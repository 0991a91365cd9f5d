#ifndef LIECHAN_TENSOR_HPP
#define LIECHAN_TENSOR_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <vector>

#include "liechan/error.hpp"

namespace liechan {

/// Dense row-major tensor of arbitrary rank.
template <class T>
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<std::size_t> shape, T fill = T{})
      : shape_(std::move(shape)), data_(count(shape_), fill) {}

  Tensor(std::vector<std::size_t> shape, std::vector<T> data) : shape_(std::move(shape)), data_(std::move(data)) {
    if (data_.size() != count(shape_))
      throw Error(ErrorKind::DimensionMismatch, "tensor data does not match its shape");
  }

  /// Rank-r tensor with every extent equal to k.
  static Tensor cube(std::size_t k, std::size_t rank, T fill = T{}) {
    return Tensor(std::vector<std::size_t>(rank, k), fill);
  }

  std::size_t rank() const noexcept { return shape_.size(); }
  const std::vector<std::size_t>& shape() const noexcept { return shape_; }
  const std::vector<T>& data() const noexcept { return data_; }
  std::vector<T>& data() noexcept { return data_; }
  std::size_t size() const noexcept { return data_.size(); }

  std::size_t offset(std::span<const std::size_t> idx) const {
    if (idx.size() != shape_.size()) throw Error(ErrorKind::DimensionMismatch, "tensor index rank mismatch");
    std::size_t off = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] >= shape_[i]) throw Error(ErrorKind::InvalidArgument, "tensor index out of range");
      off = off * shape_[i] + idx[i];
    }
    return off;
  }

  T& operator[](std::span<const std::size_t> idx) { return data_[offset(idx)]; }
  const T& operator[](std::span<const std::size_t> idx) const { return data_[offset(idx)]; }

  template <class... I>
  T& operator()(I... i) {
    const std::size_t idx[] = {static_cast<std::size_t>(i)...};
    return data_[offset(idx)];
  }
  template <class... I>
  const T& operator()(I... i) const {
    const std::size_t idx[] = {static_cast<std::size_t>(i)...};
    return data_[offset(idx)];
  }

 private:
  static std::size_t count(const std::vector<std::size_t>& shape) {
    return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
  }

  std::vector<std::size_t> shape_;
  std::vector<T> data_;
};

using RealTensor = Tensor<double>;

/// All nondecreasing multi-indices of length `rank` over {0..k-1}, in
/// lexicographic order. These label the symmetrized monomials of that rank.
inline std::vector<std::vector<std::size_t>> sorted_multi_indices(std::size_t k, std::size_t rank) {
  std::vector<std::vector<std::size_t>> out;
  if (rank == 0) {
    out.emplace_back();
    return out;
  }
  if (k == 0) return out;
  std::vector<std::size_t> idx(rank, 0);
  while (true) {
    out.push_back(idx);
    std::size_t pos = rank;
    while (pos > 0 && idx[pos - 1] == k - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    std::fill(idx.begin() + static_cast<std::ptrdiff_t>(pos), idx.end(), idx[pos - 1]);
  }
  return out;
}

/// Number of distinct orderings of a multi-index (multinomial coefficient).
inline std::size_t distinct_permutations(std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end());
  std::size_t count = 0;
  do {
    ++count;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return count;
}

/// Writes `value` at every ordering of `idx` in a fully symmetric tensor.
template <class T>
void set_symmetric(Tensor<T>& t, std::vector<std::size_t> idx, const T& value) {
  std::sort(idx.begin(), idx.end());
  do {
    t[idx] = value;
  } while (std::next_permutation(idx.begin(), idx.end()));
}

}  // namespace liechan

#endif
