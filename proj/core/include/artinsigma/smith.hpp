#pragma once

#include <cstddef>
#include <vector>

#include "artinsigma/matrix.hpp"
#include "artinsigma/rational.hpp"

namespace artinsigma {

/// Nonzero diagonal of the integer Smith normal form: positive d_1 | d_2 | ...
/// Pivoting on minimal absolute value, exact arbitrary-precision arithmetic.
std::vector<Integer> integer_invariant_factors(Matrix<Integer> m);

/// Rank over a field by Gaussian elimination. F is RationalField or PrimeField.
template <class F>
std::size_t field_rank(const F& field, Matrix<typename F::Element> m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && field.is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(rank, pivot);
    const auto inv = field.inv(m(rank, col));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (field.is_zero(m(r, col))) continue;
      const auto factor = field.mul(m(r, col), inv);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) = field.sub(m(r, c), field.mul(factor, m(rank, c)));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace artinsigma
