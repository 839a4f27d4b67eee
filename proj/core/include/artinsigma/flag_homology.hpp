#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "artinsigma/field.hpp"
#include "artinsigma/graph.hpp"
#include "artinsigma/matrix.hpp"
#include "artinsigma/rational.hpp"

namespace artinsigma {

/// All cliques with at most max_size vertices, the empty clique first, then
/// by size, lexicographic in the vertex order within each size.
std::vector<VertexMask> enumerate_cliques(const EvenGraph& g, std::size_t max_size);

/// lk_{gamma1}(delta): the subgraph of gamma1 induced on the vertices adjacent
/// in `ambient` to every vertex of delta. delta is a clique of ambient; the
/// empty delta returns gamma1. Throws InputError if gamma1 is not a subgraph
/// of ambient or delta is not a clique.
EvenGraph link(const EvenGraph& ambient, const EvenGraph& gamma1, VertexMask delta);

/// Finite abstract simplicial complex. The empty simplex is always present,
/// so the complex of the empty graph is {∅} and has reduced homology in
/// degree -1.
class SimplicialComplex {
 public:
  SimplicialComplex() : by_size_{{VertexMask{0}}} {}
  /// Downward closure of the given faces over the given vertex order.
  SimplicialComplex(std::vector<std::string> vertex_order, const std::vector<VertexMask>& faces);

  const std::vector<std::string>& vertex_order() const { return vertices_; }
  /// Simplices with k vertices (dimension k - 1), lexicographically sorted.
  const std::vector<VertexMask>& simplices_of_size(std::size_t k) const;
  /// Dimension of the top simplex; -1 for {∅}.
  int dimension() const { return static_cast<int>(by_size_.size()) - 2; }
  std::size_t simplex_count() const;
  bool contains(VertexMask simplex) const;

  /// Re-orders vertices by a permutation: new vertex i is old vertex perm[i].
  SimplicialComplex permuted(const std::vector<std::size_t>& perm) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<VertexMask>> by_size_;
};

SimplicialComplex flag_complex(const EvenGraph& g);

/// Augmented boundary maps d_0 .. d_max_degree. d_d has rows indexed by the
/// (d-1)-simplices and columns by the d-simplices; d_0 maps every vertex to
/// the empty simplex. The face omitting the i-th vertex has sign (-1)^i.
std::vector<Matrix<Integer>> boundary_matrices(const SimplicialComplex& c, int max_degree);

struct DegreeHomology {
  int degree = -1;
  std::size_t betti = 0;
  /// Invariant factors > 1 over Z; always empty over a field.
  std::vector<Integer> torsion;
  bool vanishes() const { return betti == 0 && torsion.empty(); }
};

struct HomologyProfile {
  Coefficients coefficients;
  /// Degrees -1 .. max_degree in order.
  std::vector<DegreeHomology> degrees;
  const DegreeHomology& at(int degree) const;
};

HomologyProfile reduced_homology(const SimplicialComplex& c, Coefficients coeffs, int max_degree);

/// Reduced homology vanishes in all degrees -1 .. d (vacuous for d <= -2).
bool is_d_acyclic(const SimplicialComplex& c, int d, Coefficients coeffs);

/// A vertex adjacent to every other vertex; the flag complex is then a cone.
bool has_cone_vertex(const EvenGraph& g);

}  // namespace artinsigma
