#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "artinsigma/graph.hpp"
#include "artinsigma/rational.hpp"

namespace artinsigma {

/// Character of A_G given by its values m_v on the generators, stored in the
/// vertex order of the graph it was built for.
class Character {
 public:
  Character() = default;
  /// Throws InputError unless values has exactly the vertex ids of g as keys.
  Character(const EvenGraph& g, const std::map<std::string, Rational>& values);
  /// Values in vertex order.
  Character(const EvenGraph& g, std::vector<Rational> values);

  const std::vector<Rational>& values() const { return values_; }
  const Rational& vertex_value(VertexIndex v) const { return values_.at(v); }
  Rational edge_value(const Edge& e) const { return values_.at(e.u) + values_.at(e.v); }
  bool is_zero() const;
  std::size_t size() const { return values_.size(); }

  Character scaled(const Rational& c) const;
  /// Restriction to a subgraph, matched by vertex id.
  Character restricted(const EvenGraph& from, const EvenGraph& to) const;

  /// Positive multiple with coprime integer values (all zeros for the zero
  /// character). Throws InputError if a value does not fit in 32 bits.
  std::vector<std::int64_t> primitive_integer_values() const;

 private:
  std::vector<Rational> values_;
};

struct ChiClassification {
  VertexMask dead_vertices = 0;
  /// Indices into g.edges(): label > 2 and m_e = 0.
  std::vector<std::size_t> dead_edges;
  /// For each relevant prime p, the edges with m_e = 0 and p | half label.
  std::map<std::uint64_t, std::vector<std::size_t>> p_dead_edges;
  std::set<std::uint64_t> relevant_primes;
  bool zero_character = false;

  /// p-dead edges for an arbitrary p (empty for p = 0 or irrelevant p).
  std::vector<std::size_t> p_dead(std::uint64_t p) const;
};

ChiClassification classify(const EvenGraph& g, const Character& chi);

/// Which edges/vertices are removed when forming the living subgraph.
struct LivingMode {
  enum class Kind { L0, L, Lp };
  Kind kind = Kind::L;
  std::uint64_t p = 0;

  /// Dead vertices removed only.
  static LivingMode dead_vertices_only() { return {Kind::L0, 0}; }
  /// Dead vertices and open dead edges removed.
  static LivingMode global() { return {Kind::L, 0}; }
  /// Dead vertices and open p-dead edges removed; p = 0 coincides with L0.
  static LivingMode p_local(std::uint64_t p) { return {Kind::Lp, p}; }

  std::string name() const;
};

EvenGraph living_subgraph(const EvenGraph& g, const Character& chi, LivingMode mode);
EvenGraph living_subgraph(const EvenGraph& g, const ChiClassification& cls, LivingMode mode);

struct CenterGenerator {
  std::string description;
  Rational value;
};

struct CenterEvaluation {
  std::vector<CenterGenerator> generators;
  bool is_zero() const;
};

/// chi on the generators of Z(A_delta): (vw)^k for each label > 2 edge of
/// delta (value k * m_e) and v for each vertex of delta on no such edge.
/// Throws InputError if delta is not a clique.
CenterEvaluation center_character(const EvenGraph& g, const Character& chi, VertexMask delta);

struct BMode {
  bool p_local = false;
  std::uint64_t p = 0;

  static BMode global() { return {false, 0}; }
  static BMode local(std::uint64_t p) { return {true, p}; }
  std::string name() const;
};

/// Cliques D (including the empty one) with |D| <= max_size such that every
/// vertex of D is dead or lies on a dead (p-dead in local mode) edge of D.
/// In global mode the result is cross-checked against center_character and a
/// mismatch throws ConsistencyError. Throws InputError on an FC violation.
std::vector<VertexMask> enumerate_B(const EvenGraph& g, const Character& chi, BMode mode,
                                    std::size_t max_size);

/// Every vertex of g outside sub has a g-neighbor in sub.
bool is_dominating(const EvenGraph& g, const EvenGraph& sub);

}  // namespace artinsigma
