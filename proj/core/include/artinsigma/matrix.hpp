#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace artinsigma {

/// Row-major dense matrix. Dimensions may be zero.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  template <class U, class Fn>
  Matrix<U> map(Fn&& fn) const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = fn((*this)(r, c));
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Ring-generic product; `mul`/`add` come from the caller.
template <class T, class Mul, class Add>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b, const T& zero, Mul mul, Add add) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  Matrix<T> out(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = add(out(i, j), mul(a(i, k), b(k, j)));
  return out;
}

}  // namespace artinsigma
