#include "artinsigma/flag_homology.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "artinsigma/errors.hpp"
#include "artinsigma/smith.hpp"

namespace artinsigma {

namespace {

// Lexicographic order on equal-size vertex sets viewed as increasing sequences.
bool lex_less(VertexMask a, VertexMask b) {
  if (a == b) return false;
  VertexMask diff = a ^ b;
  return (a & (diff & (~diff + 1))) != 0;
}

std::size_t index_in(const std::vector<VertexMask>& sorted, VertexMask s) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), s, lex_less);
  if (it == sorted.end() || *it != s) throw ConsistencyError("face missing from simplicial complex");
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

std::vector<VertexMask> enumerate_cliques(const EvenGraph& g, std::size_t max_size) {
  std::vector<VertexMask> out{0};
  std::vector<VertexMask> level{0};
  for (std::size_t k = 1; k <= max_size && !level.empty(); ++k) {
    std::vector<VertexMask> next;
    for (VertexMask c : level) {
      VertexMask common = g.all_vertices();
      for (VertexIndex v : mask_indices(c)) common &= g.neighbors(v);
      VertexIndex start = c == 0 ? 0 : static_cast<VertexIndex>(63 - std::countl_zero(c)) + 1;
      for (VertexIndex w = start; w < g.size(); ++w) {
        if (common & bit(w)) next.push_back(c | bit(w));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

EvenGraph link(const EvenGraph& ambient, const EvenGraph& gamma1, VertexMask delta) {
  if (!is_subgraph(gamma1, ambient)) throw InputError("link: subgraph is not contained in the ambient graph");
  if (!ambient.is_clique(delta)) throw InputError("link: vertex set is not a clique of the ambient graph");
  VertexMask keep = 0;
  for (VertexIndex w = 0; w < gamma1.size(); ++w) {
    VertexIndex a = *ambient.index_of(gamma1.id(w));
    if ((ambient.neighbors(a) & delta) == delta && (delta & bit(a)) == 0) keep |= bit(w);
  }
  return induced_subgraph(gamma1, keep);
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_order,
                                     const std::vector<VertexMask>& faces)
    : vertices_(std::move(vertex_order)) {
  std::vector<std::set<VertexMask, decltype(&lex_less)>> sets;
  auto ensure = [&](std::size_t k) {
    while (sets.size() <= k) sets.emplace_back(&lex_less);
  };
  ensure(0);
  sets[0].insert(0);
  const VertexMask all = vertices_.size() == 64 ? ~VertexMask{0} : bit(vertices_.size()) - 1;
  for (VertexMask f : faces) {
    if ((f & ~all) != 0) throw InputError("simplex uses a vertex outside the vertex order");
    // Enumerate all subsets of f.
    VertexMask sub = f;
    for (;;) {
      std::size_t k = static_cast<std::size_t>(std::popcount(sub));
      ensure(k);
      sets[k].insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  by_size_.clear();
  for (auto& s : sets) by_size_.emplace_back(s.begin(), s.end());
}

const std::vector<VertexMask>& SimplicialComplex::simplices_of_size(std::size_t k) const {
  static const std::vector<VertexMask> none;
  return k < by_size_.size() ? by_size_[k] : none;
}

std::size_t SimplicialComplex::simplex_count() const {
  std::size_t n = 0;
  for (const auto& s : by_size_) n += s.size();
  return n;
}

bool SimplicialComplex::contains(VertexMask simplex) const {
  const auto& level = simplices_of_size(static_cast<std::size_t>(std::popcount(simplex)));
  return std::binary_search(level.begin(), level.end(), simplex, lex_less);
}

SimplicialComplex SimplicialComplex::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != vertices_.size()) throw InputError("permutation size mismatch");
  std::vector<std::size_t> new_pos(perm.size());
  std::vector<std::string> order(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    new_pos.at(perm[i]) = i;
    order[i] = vertices_.at(perm[i]);
  }
  std::vector<VertexMask> faces;
  for (const auto& level : by_size_) {
    for (VertexMask s : level) {
      VertexMask t = 0;
      for (VertexIndex v : mask_indices(s)) t |= bit(new_pos[v]);
      faces.push_back(t);
    }
  }
  return SimplicialComplex(std::move(order), faces);
}

SimplicialComplex flag_complex(const EvenGraph& g) {
  return SimplicialComplex(g.vertex_ids(), enumerate_cliques(g, g.size()));
}

std::vector<Matrix<Integer>> boundary_matrices(const SimplicialComplex& c, int max_degree) {
  std::vector<Matrix<Integer>> out;
  for (int d = 0; d <= max_degree; ++d) {
    const auto& cols = c.simplices_of_size(static_cast<std::size_t>(d) + 1);
    const auto& rows = c.simplices_of_size(static_cast<std::size_t>(d));
    Matrix<Integer> m(rows.size(), cols.size(), Integer(0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      int i = 0;
      for (VertexIndex v : mask_indices(cols[j])) {
        m(index_in(rows, cols[j] & ~bit(v)), j) = (i % 2 == 0) ? 1 : -1;
        ++i;
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

const DegreeHomology& HomologyProfile::at(int degree) const {
  auto idx = static_cast<std::size_t>(degree + 1);
  if (degree < -1 || idx >= degrees.size()) throw InputError("homology degree out of computed range");
  return degrees[idx];
}

HomologyProfile reduced_homology(const SimplicialComplex& c, Coefficients coeffs, int max_degree) {
  HomologyProfile profile{coeffs, {}};
  if (max_degree < -1) return profile;
  auto boundaries = boundary_matrices(c, max_degree + 1);
  // rank of d_d for d = 0 .. max_degree + 1, and Z-torsion of the cokernels.
  std::vector<std::size_t> ranks;
  std::vector<std::vector<Integer>> torsion;
  for (auto& m : boundaries) {
    if (coeffs.kind == Coefficients::Kind::Integers) {
      auto factors = integer_invariant_factors(m);
      ranks.push_back(factors.size());
      std::vector<Integer> t;
      for (auto& f : factors)
        if (f > 1) t.push_back(f);
      torsion.push_back(std::move(t));
    } else {
      ranks.push_back(with_field(coeffs.p, [&](const auto& field) {
        using E = typename std::decay_t<decltype(field)>::Element;
        return field_rank(field, m.template map<E>([&](const Integer& x) { return field.from_integer(x); }));
      }));
      torsion.emplace_back();
    }
  }
  for (int d = -1; d <= max_degree; ++d) {
    std::size_t dim = c.simplices_of_size(static_cast<std::size_t>(d + 1)).size();
    std::size_t rank_out = d >= 0 ? ranks[static_cast<std::size_t>(d)] : 0;
    std::size_t rank_in = ranks[static_cast<std::size_t>(d + 1)];
    profile.degrees.push_back({d, dim - rank_out - rank_in, torsion[static_cast<std::size_t>(d + 1)]});
  }
  return profile;
}

bool is_d_acyclic(const SimplicialComplex& c, int d, Coefficients coeffs) {
  if (d <= -2) return true;
  auto profile = reduced_homology(c, coeffs, d);
  return std::all_of(profile.degrees.begin(), profile.degrees.end(),
                     [](const DegreeHomology& h) { return h.vanishes(); });
}

bool has_cone_vertex(const EvenGraph& g) {
  for (VertexIndex v = 0; v < g.size(); ++v) {
    if ((g.neighbors(v) | bit(v)) == g.all_vertices()) return true;
  }
  return false;
}

}  // namespace artinsigma
