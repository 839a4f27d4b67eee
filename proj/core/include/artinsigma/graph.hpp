#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace artinsigma {

using VertexIndex = std::size_t;

/// Set of vertices of one particular graph, bit i <=> vertex index i.
/// A mask is only meaningful relative to the graph it was produced from.
using VertexMask = std::uint64_t;

constexpr VertexMask bit(VertexIndex i) { return VertexMask{1} << i; }

/// Vertex indices of a mask in increasing order.
std::vector<VertexIndex> mask_indices(VertexMask mask);

struct EdgeSpec {
  std::string u;
  std::string v;
  int label = 2;
};

struct Edge {
  VertexIndex u = 0;  // u < v
  VertexIndex v = 0;
  int label = 2;

  /// Half of the label; the exponent in (uv)^k = (vu)^k.
  int half_label() const { return label / 2; }
  VertexMask mask() const { return bit(u) | bit(v); }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite simple graph with integer edge labels, defining an Artin group.
///
/// Vertex order is fixed at construction; it is the global orientation order
/// used for every simplex and every clique downstream. The constructor checks
/// structure only (distinct ids, no loops, no repeated pairs, known
/// endpoints). Label parity and the FC condition are reported by
/// validate_even() and validate_fc().
class EvenGraph {
 public:
  static constexpr std::size_t max_vertices = 64;

  EvenGraph() = default;
  EvenGraph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  VertexMask all_vertices() const;

  const std::vector<std::string>& vertex_ids() const { return ids_; }
  const std::string& id(VertexIndex i) const { return ids_.at(i); }
  std::optional<VertexIndex> index_of(const std::string& id) const;

  /// Edges sorted by (u, v).
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<std::size_t> edge_index(VertexIndex a, VertexIndex b) const;
  bool adjacent(VertexIndex a, VertexIndex b) const;
  /// Label of {a, b}, or 0 when the pair is not an edge.
  int label(VertexIndex a, VertexIndex b) const;
  VertexMask neighbors(VertexIndex i) const { return adjacency_.at(i); }

  bool is_clique(VertexMask mask) const;
  bool all_labels_two() const;

  VertexMask mask_of(const std::vector<std::string>& ids) const;
  std::vector<std::string> ids_of(VertexMask mask) const;
  std::string edge_name(const Edge& e) const;

  friend bool operator==(const EvenGraph& a, const EvenGraph& b) {
    return a.ids_ == b.ids_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, VertexIndex> index_;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adjacency_;
};

struct Violation {
  std::string kind;
  std::string message;
  std::vector<std::string> vertices;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Every label even and >= 2.
ValidationReport validate_even(const EvenGraph& g);

/// No triangle carries two edges with label > 2, i.e. inside every clique the
/// edges labeled > 2 form a matching.
ValidationReport validate_fc(const EvenGraph& g);

/// Subgraph on keep_vertices with all induced edges except drop_edges. Vertex
/// order is inherited. Throws InputError on unknown ids or non-edges.
EvenGraph induced_subgraph(const EvenGraph& g, const std::vector<std::string>& keep_vertices,
                           const std::vector<std::pair<std::string, std::string>>& drop_edges);

/// Mask-based variant; drop_edges are indices into g.edges().
EvenGraph induced_subgraph(const EvenGraph& g, VertexMask keep,
                           const std::vector<std::size_t>& drop_edges = {});

/// Re-expresses a vertex set of `from` in the indexing of `to`, matching ids.
/// Throws InputError if some vertex is missing in `to`.
VertexMask translate_mask(const EvenGraph& from, const EvenGraph& to, VertexMask mask);

/// True iff sub is a subgraph of g (vertices and edges) with equal labels.
bool is_subgraph(const EvenGraph& sub, const EvenGraph& g);

bool is_connected(const EvenGraph& g);

}  // namespace artinsigma
