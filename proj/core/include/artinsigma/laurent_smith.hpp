#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "artinsigma/laurent.hpp"
#include "artinsigma/matrix.hpp"

namespace artinsigma {

template <class F>
using LaurentMatrix = Matrix<LaurentPoly<F>>;

template <class F>
struct LaurentSmith {
  /// Canonical nonzero invariant factors d_1 | d_2 | ... (units included).
  std::vector<LaurentPoly<F>> factors;
  std::size_t rank = 0;
};

/// Smith normal form over the Euclidean domain F[t^{±1}], pivoting on the
/// entry of least span. Returns the diagonal, canonically normalized.
template <class F>
LaurentSmith<F> smith_normal_form(LaurentMatrix<F> m) {
  using Poly = LaurentPoly<F>;
  LaurentSmith<F> out;
  const std::size_t limit = std::min(m.rows(), m.cols());

  auto min_entry = [&](std::size_t k) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::size_t best_span = 0;
    for (std::size_t r = k; r < m.rows(); ++r)
      for (std::size_t c = k; c < m.cols(); ++c) {
        if (m(r, c).is_zero()) continue;
        if (!best || m(r, c).span() < best_span) {
          best = {r, c};
          best_span = m(r, c).span();
          if (best_span == 0) return best;
        }
      }
    return best;
  };

  for (std::size_t k = 0; k < limit; ++k) {
    auto pos = min_entry(k);
    if (!pos) break;
    m.swap_rows(k, pos->first);
    m.swap_cols(k, pos->second);
    for (;;) {
      bool dirty = false;
      for (std::size_t r = k + 1; r < m.rows(); ++r) {
        if (m(r, k).is_zero()) continue;
        Poly q = divmod(m(r, k), m(k, k)).first;
        for (std::size_t c = k; c < m.cols(); ++c) {
          if (!m(k, c).is_zero()) m(r, c) = m(r, c) - q * m(k, c);
        }
        if (!m(r, k).is_zero()) dirty = true;
      }
      for (std::size_t c = k + 1; c < m.cols(); ++c) {
        if (m(k, c).is_zero()) continue;
        Poly q = divmod(m(k, c), m(k, k)).first;
        for (std::size_t r = k; r < m.rows(); ++r) {
          if (!m(r, k).is_zero()) m(r, c) = m(r, c) - q * m(r, k);
        }
        if (!m(k, c).is_zero()) dirty = true;
      }
      if (!dirty) {
        std::optional<std::size_t> bad_row;
        for (std::size_t r = k + 1; r < m.rows() && !bad_row; ++r)
          for (std::size_t c = k + 1; c < m.cols(); ++c)
            if (!m(k, k).divides(m(r, c))) {
              bad_row = r;
              break;
            }
        if (!bad_row) break;
        for (std::size_t c = k; c < m.cols(); ++c) m(k, c) = m(k, c) + m(*bad_row, c);
      }
      std::size_t br = k, bc = k;
      std::size_t best = m(k, k).span();
      for (std::size_t r = k + 1; r < m.rows(); ++r)
        if (!m(r, k).is_zero() && m(r, k).span() < best) best = m(r, k).span(), br = r, bc = k;
      for (std::size_t c = k + 1; c < m.cols(); ++c)
        if (!m(k, c).is_zero() && m(k, c).span() < best) best = m(k, c).span(), br = k, bc = c;
      m.swap_rows(k, br);
      m.swap_cols(k, bc);
    }
    out.factors.push_back(m(k, k).canonical());
  }
  out.rank = out.factors.size();
  return out;
}

}  // namespace artinsigma
