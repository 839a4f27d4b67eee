#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "artinsigma/chi_analysis.hpp"
#include "artinsigma/errors.hpp"
#include "artinsigma/flag_homology.hpp"
#include "artinsigma/laurent.hpp"
#include "artinsigma/laurent_smith.hpp"

namespace artinsigma {

/// b_{v,X} = (t^{m_v} - 1) * prod_{w in X - v} q_{l(vw)/2}(t^{m_v + m_w}), with
/// `exponents` the primitive integer multiple of the character.
template <class F>
LaurentPoly<F> coefficient_b(const EvenGraph& g, const std::vector<std::int64_t>& exponents, VertexMask clique,
                             VertexIndex v, const F& field) {
  if ((clique & bit(v)) == 0) throw InputError("coefficient_b: vertex is not in the clique");
  using Poly = LaurentPoly<F>;
  Poly out = Poly::t_power(field, exponents.at(v)) - Poly::constant(field, 1);
  for (VertexIndex w : mask_indices(clique & ~bit(v))) {
    auto idx = g.edge_index(v, w);
    if (!idx) throw InputError("coefficient_b: vertex set is not a clique");
    const Edge& e = g.edges()[*idx];
    out = out * q_poly(e.half_label(), exponents.at(v) + exponents.at(w), field);
  }
  return out;
}

template <class F>
LaurentPoly<F> coefficient_b(const EvenGraph& g, const Character& chi, VertexMask clique, VertexIndex v,
                             const F& field) {
  return coefficient_b(g, chi.primitive_integer_values(), clique, v, field);
}

/// Chain complex F[t^{±1}] ⊗ (augmented chains of the flag complex shifted by
/// one) computing H_*(ker chi; F). Degree n has the cliques of size n as basis.
template <class F>
struct TwistedComplex {
  F field;
  std::vector<std::string> vertex_order;
  std::vector<std::int64_t> exponents;
  /// basis[n] = cliques with n vertices, lexicographic; basis[0] = {∅}.
  std::vector<std::vector<VertexMask>> basis;
  /// differentials[n] = D_n : C_n -> C_{n-1}; differentials[0] is 0 x dim C_0.
  std::vector<LaurentMatrix<F>> differentials;

  int max_degree() const { return static_cast<int>(basis.size()) - 1; }
};

/// Composition a * b of Laurent matrices.
template <class F>
LaurentMatrix<F> laurent_product(const LaurentMatrix<F>& a, const LaurentMatrix<F>& b, const F& field) {
  return multiply(a, b, LaurentPoly<F>(field), [](const auto& x, const auto& y) { return x * y; },
                  [](const auto& x, const auto& y) { return x + y; });
}

template <class F>
bool is_zero_matrix(const LaurentMatrix<F>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

/// Builds degrees 0..max_n. The sign of the face X - v is (-1)^i where v is the
/// i-th vertex of X in the global order. Verifies D_n D_{n+1} = 0 and throws
/// ConsistencyError otherwise.
template <class F>
TwistedComplex<F> build_salvetti_complex(const EvenGraph& g, const Character& chi, const F& field, int max_n) {
  if (max_n < 0) throw InputError("build_salvetti_complex: negative degree");
  if (!validate_even(g).ok() || !validate_fc(g).ok()) {
    throw InputError("build_salvetti_complex: graph must be even and of FC type");
  }
  TwistedComplex<F> cx{field, g.vertex_ids(), chi.primitive_integer_values(), {}, {}};
  const auto cliques = enumerate_cliques(g, static_cast<std::size_t>(max_n));
  cx.basis.resize(static_cast<std::size_t>(max_n) + 1);
  for (VertexMask c : cliques) cx.basis[static_cast<std::size_t>(std::popcount(c))].push_back(c);

  using Poly = LaurentPoly<F>;
  cx.differentials.emplace_back(0, cx.basis[0].size(), Poly(field));
  for (int n = 1; n <= max_n; ++n) {
    const auto& cols = cx.basis[static_cast<std::size_t>(n)];
    const auto& rows = cx.basis[static_cast<std::size_t>(n) - 1];
    LaurentMatrix<F> d(rows.size(), cols.size(), Poly(field));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      int i = 0;
      for (VertexIndex v : mask_indices(cols[j])) {
        VertexMask face = cols[j] & ~bit(v);
        auto row = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), face) - rows.begin());
        Poly b = coefficient_b(g, cx.exponents, cols[j], v, field);
        d(row, j) = (i % 2 == 0) ? b : -b;
        ++i;
      }
    }
    cx.differentials.push_back(std::move(d));
  }
  for (int n = 1; n < max_n; ++n) {
    auto prod = laurent_product(cx.differentials[static_cast<std::size_t>(n)],
                                cx.differentials[static_cast<std::size_t>(n) + 1], field);
    if (!is_zero_matrix<F>(prod)) {
      throw ConsistencyError("twisted differential does not square to zero in degree " + std::to_string(n));
    }
  }
  return cx;
}

template <class F>
struct ModulePresentation {
  std::size_t free_rank = 0;
  /// Non-unit invariant factors, canonical (offset 0, leading coefficient 1).
  std::vector<LaurentPoly<F>> torsion;
};

/// H_n as an F[t^{±1}]-module: free rank dim C_n - rank D_n - rank D_{n+1},
/// torsion the non-unit invariant factors of D_{n+1}.
template <class F>
ModulePresentation<F> homology_module(const TwistedComplex<F>& cx, int n) {
  if (n < 0 || n + 1 > cx.max_degree()) throw InputError("homology_module: degree out of range");
  const auto dim = cx.basis[static_cast<std::size_t>(n)].size();
  const auto out = smith_normal_form<F>(cx.differentials[static_cast<std::size_t>(n)]);
  const auto in = smith_normal_form<F>(cx.differentials[static_cast<std::size_t>(n) + 1]);
  ModulePresentation<F> result;
  result.free_rank = dim - out.rank - in.rank;
  for (const auto& f : in.factors)
    if (!f.is_unit()) result.torsion.push_back(f);
  return result;
}

using AnyModulePresentation = std::variant<ModulePresentation<RationalField>, ModulePresentation<PrimeField>>;

struct CrossCheckReport {
  std::uint64_t p = 0;
  int n = 0;
  std::size_t oracle_free_rank = 0;
  std::size_t formula_free_rank = 0;
  AnyModulePresentation module;
  bool agrees() const { return oracle_free_rank == formula_free_rank; }
};

class CrossCheckMismatch : public ConsistencyError {
 public:
  CrossCheckMismatch(const std::string& what, CrossCheckReport report)
      : ConsistencyError(what), report_(std::move(report)) {}
  const CrossCheckReport& report() const { return report_; }

 private:
  CrossCheckReport report_;
};

/// Compares the free rank of H_n(ker chi; F_p) from the Smith form of the
/// twisted complex with the link-formula sum. Throws CrossCheckMismatch on
/// disagreement.
CrossCheckReport cross_check(const EvenGraph& g, const Character& chi, std::uint64_t p, int n);

}  // namespace artinsigma
