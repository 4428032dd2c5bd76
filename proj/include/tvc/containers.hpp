#pragma once
// Dense storage used across the library: a column-major Matrix (columns are
// contiguous so regression kernels stream over observations) and a 3-D Cube
// whose innermost axis is contiguous.

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace tvc {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[c * rows_ + r];
  }
  double operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[c * rows_ + r];
  }

  std::span<double> col(std::size_t c) { return {data_.data() + c * rows_, rows_}; }
  std::span<const double> col(std::size_t c) const { return {data_.data() + c * rows_, rows_}; }

  std::span<const double> data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

class Cube {
 public:
  Cube() = default;
  Cube(std::size_t n0, std::size_t n1, std::size_t n2, double fill = 0.0)
      : n0_(n0), n1_(n1), n2_(n2), data_(n0 * n1 * n2, fill) {}

  std::size_t dim0() const noexcept { return n0_; }
  std::size_t dim1() const noexcept { return n1_; }
  std::size_t dim2() const noexcept { return n2_; }

  double& operator()(std::size_t i, std::size_t t, std::size_t j) {
    assert(i < n0_ && t < n1_ && j < n2_);
    return data_[(i * n1_ + t) * n2_ + j];
  }
  double operator()(std::size_t i, std::size_t t, std::size_t j) const {
    assert(i < n0_ && t < n1_ && j < n2_);
    return data_[(i * n1_ + t) * n2_ + j];
  }

  /// Contiguous innermost fibre at (i, t).
  std::span<double> fibre(std::size_t i, std::size_t t) {
    return {data_.data() + (i * n1_ + t) * n2_, n2_};
  }
  std::span<const double> fibre(std::size_t i, std::size_t t) const {
    return {data_.data() + (i * n1_ + t) * n2_, n2_};
  }

  std::span<const double> data() const noexcept { return data_; }

  friend bool operator==(const Cube&, const Cube&) = default;

 private:
  std::size_t n0_ = 0;
  std::size_t n1_ = 0;
  std::size_t n2_ = 0;
  std::vector<double> data_;
};

/// Row-major N x M grid of doubles (country x year series).
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<double> col_copy(std::size_t c) const {
    std::vector<double> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace tvc
