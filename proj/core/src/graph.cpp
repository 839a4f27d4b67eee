#include "artinsigma/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "artinsigma/errors.hpp"

namespace artinsigma {

std::vector<VertexIndex> mask_indices(VertexMask mask) {
  std::vector<VertexIndex> out;
  out.reserve(std::popcount(mask));
  while (mask != 0) {
    out.push_back(static_cast<VertexIndex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

EvenGraph::EvenGraph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges)
    : ids_(std::move(vertices)) {
  if (ids_.size() > max_vertices) {
    throw InputError("graph has " + std::to_string(ids_.size()) + " vertices; at most " +
                     std::to_string(max_vertices) + " are supported");
  }
  for (VertexIndex i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], i).second) {
      throw InputError("duplicate vertex id '" + ids_[i] + "'");
    }
  }
  adjacency_.assign(ids_.size(), 0);
  for (const auto& spec : edges) {
    auto a = index_of(spec.u);
    auto b = index_of(spec.v);
    if (!a || !b) {
      throw InputError("edge " + spec.u + "-" + spec.v + " has an unknown endpoint");
    }
    if (*a == *b) {
      throw InputError("loop at vertex '" + spec.u + "'");
    }
    auto [u, v] = std::minmax(*a, *b);
    if (adjacency_[u] & bit(v)) {
      throw InputError("repeated edge " + spec.u + "-" + spec.v);
    }
    adjacency_[u] |= bit(v);
    adjacency_[v] |= bit(u);
    edges_.push_back(Edge{u, v, spec.label});
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& x, const Edge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
}

VertexMask EvenGraph::all_vertices() const {
  return ids_.size() == 64 ? ~VertexMask{0} : bit(ids_.size()) - 1;
}

std::optional<VertexIndex> EvenGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> EvenGraph::edge_index(VertexIndex a, VertexIndex b) const {
  if (a >= size() || b >= size() || !adjacent(a, b)) return std::nullopt;
  auto [u, v] = std::minmax(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(u, v),
                             [](const Edge& e, const std::pair<VertexIndex, VertexIndex>& key) {
                               return std::pair(e.u, e.v) < key;
                             });
  return static_cast<std::size_t>(it - edges_.begin());
}

bool EvenGraph::adjacent(VertexIndex a, VertexIndex b) const {
  return a < size() && (adjacency_[a] & bit(b)) != 0;
}

int EvenGraph::label(VertexIndex a, VertexIndex b) const {
  auto idx = edge_index(a, b);
  return idx ? edges_[*idx].label : 0;
}

bool EvenGraph::is_clique(VertexMask mask) const {
  if ((mask & ~all_vertices()) != 0) return false;
  for (VertexIndex v : mask_indices(mask)) {
    if ((mask & ~bit(v) & ~adjacency_[v]) != 0) return false;
  }
  return true;
}

bool EvenGraph::all_labels_two() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.label == 2; });
}

VertexMask EvenGraph::mask_of(const std::vector<std::string>& ids) const {
  VertexMask m = 0;
  for (const auto& id : ids) {
    auto i = index_of(id);
    if (!i) throw InputError("unknown vertex id '" + id + "'");
    m |= bit(*i);
  }
  return m;
}

std::vector<std::string> EvenGraph::ids_of(VertexMask mask) const {
  std::vector<std::string> out;
  for (VertexIndex i : mask_indices(mask)) out.push_back(ids_.at(i));
  return out;
}

std::string EvenGraph::edge_name(const Edge& e) const { return ids_.at(e.u) + "-" + ids_.at(e.v); }

ValidationReport validate_even(const EvenGraph& g) {
  ValidationReport report;
  for (const auto& e : g.edges()) {
    if (e.label < 2) {
      report.violations.push_back({"label below 2",
                                   "edge " + g.edge_name(e) + " has label " + std::to_string(e.label),
                                   {g.id(e.u), g.id(e.v)}});
    } else if (e.label % 2 != 0) {
      report.violations.push_back({"odd label",
                                   "edge " + g.edge_name(e) + " has odd label " + std::to_string(e.label),
                                   {g.id(e.u), g.id(e.v)}});
    }
  }
  return report;
}

ValidationReport validate_fc(const EvenGraph& g) {
  ValidationReport report;
  const std::size_t n = g.size();
  for (VertexIndex a = 0; a < n; ++a) {
    for (VertexIndex b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (VertexIndex c = b + 1; c < n; ++c) {
        if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
        int big = (g.label(a, b) > 2) + (g.label(a, c) > 2) + (g.label(b, c) > 2);
        if (big >= 2) {
          report.violations.push_back(
              {"fc violation",
               "triangle " + g.id(a) + "," + g.id(b) + "," + g.id(c) +
                   " has two edges with label > 2",
               {g.id(a), g.id(b), g.id(c)}});
        }
      }
    }
  }
  return report;
}

EvenGraph induced_subgraph(const EvenGraph& g, VertexMask keep,
                           const std::vector<std::size_t>& drop_edges) {
  if ((keep & ~g.all_vertices()) != 0) throw InputError("induced_subgraph: vertex outside graph");
  std::set<std::size_t> dropped(drop_edges.begin(), drop_edges.end());
  if (!dropped.empty() && *dropped.rbegin() >= g.edges().size()) {
    throw InputError("induced_subgraph: edge index out of range");
  }
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if ((keep & e.mask()) == e.mask() && !dropped.contains(i)) {
      edges.push_back({g.id(e.u), g.id(e.v), e.label});
    }
  }
  return EvenGraph(g.ids_of(keep), edges);
}

EvenGraph induced_subgraph(const EvenGraph& g, const std::vector<std::string>& keep_vertices,
                           const std::vector<std::pair<std::string, std::string>>& drop_edges) {
  VertexMask keep = g.mask_of(keep_vertices);
  std::vector<std::size_t> drop;
  for (const auto& [a, b] : drop_edges) {
    auto ia = g.index_of(a);
    auto ib = g.index_of(b);
    if (!ia || !ib) throw InputError("unknown vertex in dropped edge " + a + "-" + b);
    auto idx = g.edge_index(*ia, *ib);
    if (!idx) throw InputError("dropped pair " + a + "-" + b + " is not an edge");
    drop.push_back(*idx);
  }
  return induced_subgraph(g, keep, drop);
}

VertexMask translate_mask(const EvenGraph& from, const EvenGraph& to, VertexMask mask) {
  VertexMask out = 0;
  for (VertexIndex i : mask_indices(mask)) {
    auto j = to.index_of(from.id(i));
    if (!j) throw InputError("vertex '" + from.id(i) + "' is not present in target graph");
    out |= bit(*j);
  }
  return out;
}

bool is_subgraph(const EvenGraph& sub, const EvenGraph& g) {
  for (const auto& id : sub.vertex_ids()) {
    if (!g.index_of(id)) return false;
  }
  for (const auto& e : sub.edges()) {
    auto a = *g.index_of(sub.id(e.u));
    auto b = *g.index_of(sub.id(e.v));
    if (g.label(a, b) != e.label) return false;
  }
  return true;
}

bool is_connected(const EvenGraph& g) {
  if (g.empty()) return false;
  VertexMask seen = bit(0);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexIndex v : mask_indices(frontier)) next |= g.neighbors(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.all_vertices();
}

}  // namespace artinsigma
