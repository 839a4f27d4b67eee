#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "artinsigma/chi_analysis.hpp"
#include "artinsigma/graph.hpp"
#include "artinsigma/rational.hpp"

namespace artinsigma {

enum class Membership { In, NotIn, Unknown };

std::string to_string(Membership m);

struct Justification {
  std::string rule;
  std::string statement;
  std::string detail;
};

struct Verdict {
  /// "sigma" (homological, integer coefficients), "sigma-homotopic" or "fp".
  std::string subject;
  Membership status = Membership::Unknown;
  int degree = 0;
  /// Rules that fired. For Unknown, every rule with the reason it abstained.
  std::vector<Justification> justifications;
};

namespace rules {
inline constexpr const char* strong_link = "strong-link";
inline constexpr const char* p_local_obstruction = "p-local-obstruction";
inline constexpr const char* sigma1_odd_cycle = "sigma1-odd-cycle";
inline constexpr const char* clique_product = "clique-product";
inline constexpr const char* symmetry = "symmetry";
inline constexpr const char* homotopic_link = "homotopic-link";
}  // namespace rules

/// Membership of [chi] in the homological invariant of degree n. Evaluates
/// every rule; throws ConsistencyError when rules disagree.
Verdict sigma_verdict(const EvenGraph& g, const Character& chi, int n);

/// Whether ker chi is of type FP_n.
Verdict fp_verdict(const EvenGraph& g, const Character& chi, int n);

/// Homotopical invariant: In only when the homotopic link condition holds
/// exactly, Unknown otherwise.
Verdict homotopic_sigma_verdict(const EvenGraph& g, const Character& chi, int n);

/// Dihedral Artin group with the given label (odd labels >= 3 give the
/// odd type, even labels >= 4 the even type). Throws on (0, 0).
bool dihedral_sigma(int label, const Rational& m_x, const Rational& m_y, int n);

/// Closed form on a clique delta of an even FC graph. A_delta is a product of
/// dihedral groups (label > 2 edges) and infinite cyclic groups (the other
/// vertices); [chi] is outside the degree-m invariant exactly when chi kills
/// every cyclic factor, m_e = 0 on every label > 2 edge, and at most m of
/// those edges carry a nonzero restriction of chi.
bool product_sigma_member(const EvenGraph& g, VertexMask delta, const Character& chi, int m);

/// The subgraph of label > 2 edges contains no cycle of even length.
bool odd_cycle_condition(const EvenGraph& g);

struct KernelDimension {
  std::uint64_t p = 0;
  int n = 0;
  std::size_t free_rank = 0;
  bool finite() const { return free_rank == 0; }
};

/// dim H_n(ker chi; F_p) is finite iff the free rank vanishes. The rank is
/// taken from the cross-checked computation (both pipelines must agree).
KernelDimension kernel_homology_dimension(const EvenGraph& g, const Character& chi, std::uint64_t p, int n);

}  // namespace artinsigma
