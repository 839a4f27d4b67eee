#include "artinsigma/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace artinsigma {

namespace {

// Position of the nonzero entry of least absolute value in the trailing
// submatrix starting at (k, k).
std::optional<std::pair<std::size_t, std::size_t>> min_entry(const Matrix<Integer>& m, std::size_t k) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t r = k; r < m.rows(); ++r) {
    for (std::size_t c = k; c < m.cols(); ++c) {
      if (m(r, c) == 0) continue;
      Integer a = abs(m(r, c));
      if (!best || a < best_abs) {
        best = {r, c};
        best_abs = a;
        if (best_abs == 1) return best;
      }
    }
  }
  return best;
}

}  // namespace

std::vector<Integer> integer_invariant_factors(Matrix<Integer> m) {
  std::vector<Integer> diag;
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t k = 0; k < limit; ++k) {
    auto pos = min_entry(m, k);
    if (!pos) break;
    m.swap_rows(k, pos->first);
    m.swap_cols(k, pos->second);
    for (;;) {
      bool dirty = false;
      // Column k below the pivot.
      for (std::size_t r = k + 1; r < m.rows(); ++r) {
        if (m(r, k) == 0) continue;
        Integer q = m(r, k) / m(k, k);
        for (std::size_t c = k; c < m.cols(); ++c) m(r, c) -= q * m(k, c);
        if (m(r, k) != 0) dirty = true;
      }
      // Row k right of the pivot.
      for (std::size_t c = k + 1; c < m.cols(); ++c) {
        if (m(k, c) == 0) continue;
        Integer q = m(k, c) / m(k, k);
        for (std::size_t r = k; r < m.rows(); ++r) m(r, c) -= q * m(r, k);
        if (m(k, c) != 0) dirty = true;
      }
      if (!dirty) {
        // The pivot must divide the whole trailing block.
        std::optional<std::size_t> bad_row;
        for (std::size_t r = k + 1; r < m.rows() && !bad_row; ++r)
          for (std::size_t c = k + 1; c < m.cols(); ++c)
            if (m(r, c) % m(k, k) != 0) {
              bad_row = r;
              break;
            }
        if (!bad_row) break;
        for (std::size_t c = k; c < m.cols(); ++c) m(k, c) += m(*bad_row, c);
      }
      // Bring the smallest remainder of row/column k to the pivot.
      std::size_t br = k, bc = k;
      Integer best = abs(m(k, k));
      for (std::size_t r = k + 1; r < m.rows(); ++r)
        if (m(r, k) != 0 && abs(m(r, k)) < best) best = abs(m(r, k)), br = r, bc = k;
      for (std::size_t c = k + 1; c < m.cols(); ++c)
        if (m(k, c) != 0 && abs(m(k, c)) < best) best = abs(m(k, c)), br = k, bc = c;
      m.swap_rows(k, br);
      m.swap_cols(k, bc);
    }
    diag.push_back(abs(m(k, k)));
  }
  return diag;
}

}  // namespace artinsigma
