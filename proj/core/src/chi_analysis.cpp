#include "artinsigma/chi_analysis.hpp"

#include <algorithm>
#include <bit>

#include "artinsigma/errors.hpp"
#include "artinsigma/flag_homology.hpp"

namespace artinsigma {

Character::Character(const EvenGraph& g, const std::map<std::string, Rational>& values) {
  if (values.size() != g.size()) {
    throw InputError("character has " + std::to_string(values.size()) + " values for " +
                     std::to_string(g.size()) + " vertices");
  }
  values_.reserve(g.size());
  for (const auto& id : g.vertex_ids()) {
    auto it = values.find(id);
    if (it == values.end()) throw InputError("character has no value for vertex '" + id + "'");
    values_.push_back(it->second);
  }
}

Character::Character(const EvenGraph& g, std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.size() != g.size()) {
    throw InputError("character has " + std::to_string(values_.size()) + " values for " +
                     std::to_string(g.size()) + " vertices");
  }
}

bool Character::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& r) { return r == 0; });
}

Character Character::scaled(const Rational& c) const {
  Character out = *this;
  for (auto& v : out.values_) v *= c;
  return out;
}

Character Character::restricted(const EvenGraph& from, const EvenGraph& to) const {
  Character out;
  out.values_.reserve(to.size());
  for (const auto& id : to.vertex_ids()) {
    auto i = from.index_of(id);
    if (!i) throw InputError("restriction target has unknown vertex '" + id + "'");
    out.values_.push_back(values_.at(*i));
  }
  return out;
}

std::vector<std::int64_t> Character::primitive_integer_values() const {
  Integer lcm_den = 1;
  for (const auto& v : values_) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(v));
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& v : values_) {
    Integer k = numerator(v) * (lcm_den / denominator(v));
    g = boost::multiprecision::gcd(g, k);
    ints.push_back(k);
  }
  std::vector<std::int64_t> out;
  out.reserve(ints.size());
  const Integer limit = Integer(1) << 31;
  for (auto& k : ints) {
    if (g != 0) k /= g;
    if (abs(k) >= limit) throw InputError("character value too large after clearing denominators");
    out.push_back(static_cast<std::int64_t>(k));
  }
  return out;
}

std::vector<std::size_t> ChiClassification::p_dead(std::uint64_t p) const {
  auto it = p_dead_edges.find(p);
  return it == p_dead_edges.end() ? std::vector<std::size_t>{} : it->second;
}

ChiClassification classify(const EvenGraph& g, const Character& chi) {
  if (chi.size() != g.size()) throw InputError("character domain does not match the graph");
  ChiClassification cls;
  cls.zero_character = chi.is_zero();
  for (VertexIndex v = 0; v < g.size(); ++v) {
    if (chi.vertex_value(v) == 0) cls.dead_vertices |= bit(v);
  }
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if (chi.edge_value(e) != 0) continue;
    if (e.label > 2) cls.dead_edges.push_back(i);
    if (e.half_label() < 1) continue;
    for (auto p : prime_divisors(static_cast<std::uint64_t>(e.half_label()))) {
      cls.p_dead_edges[p].push_back(i);
      cls.relevant_primes.insert(p);
    }
  }
  return cls;
}

std::string LivingMode::name() const {
  switch (kind) {
    case Kind::L0: return "L0";
    case Kind::L: return "L";
    case Kind::Lp: return "L" + std::to_string(p);
  }
  return "?";
}

EvenGraph living_subgraph(const EvenGraph& g, const ChiClassification& cls, LivingMode mode) {
  VertexMask keep = g.all_vertices() & ~cls.dead_vertices;
  switch (mode.kind) {
    case LivingMode::Kind::L0: return induced_subgraph(g, keep);
    case LivingMode::Kind::L: return induced_subgraph(g, keep, cls.dead_edges);
    case LivingMode::Kind::Lp: return induced_subgraph(g, keep, cls.p_dead(mode.p));
  }
  return induced_subgraph(g, keep);
}

EvenGraph living_subgraph(const EvenGraph& g, const Character& chi, LivingMode mode) {
  if (mode.kind == LivingMode::Kind::Lp) require_prime_or_zero(mode.p);
  return living_subgraph(g, classify(g, chi), mode);
}

bool CenterEvaluation::is_zero() const {
  return std::all_of(generators.begin(), generators.end(),
                     [](const CenterGenerator& c) { return c.value == 0; });
}

CenterEvaluation center_character(const EvenGraph& g, const Character& chi, VertexMask delta) {
  if (!g.is_clique(delta)) throw InputError("center_character: vertex set is not a clique");
  CenterEvaluation out;
  VertexMask covered = 0;
  for (const auto& e : g.edges()) {
    if (e.label <= 2 || (delta & e.mask()) != e.mask()) continue;
    if (covered & e.mask()) {
      throw InputError("center_character: clique violates the FC condition at " + g.edge_name(e));
    }
    covered |= e.mask();
    std::string desc = "(" + g.id(e.u) + g.id(e.v) + ")^" + std::to_string(e.half_label());
    out.generators.push_back({std::move(desc), Rational(e.half_label()) * chi.edge_value(e)});
  }
  for (VertexIndex v : mask_indices(delta & ~covered)) {
    out.generators.push_back({g.id(v), chi.vertex_value(v)});
  }
  return out;
}

std::string BMode::name() const { return p_local ? "p-local(" + std::to_string(p) + ")" : "global"; }

std::vector<VertexMask> enumerate_B(const EvenGraph& g, const Character& chi, BMode mode,
                                    std::size_t max_size) {
  if (!validate_fc(g).ok()) throw InputError("enumerate_B: graph is not of FC type");
  if (mode.p_local) require_prime_or_zero(mode.p);
  const ChiClassification cls = classify(g, chi);
  const std::vector<std::size_t> killing = mode.p_local ? cls.p_dead(mode.p) : cls.dead_edges;

  std::vector<VertexMask> out;
  for (VertexMask delta : enumerate_cliques(g, max_size)) {
    VertexMask covered = delta & cls.dead_vertices;
    for (std::size_t i : killing) {
      VertexMask em = g.edges()[i].mask();
      if ((delta & em) == em) covered |= em;
    }
    bool member = covered == delta;
    if (!mode.p_local && member != center_character(g, chi, delta).is_zero()) {
      throw ConsistencyError("B-membership and center evaluation disagree on clique {" +
                             [&] {
                               std::string s;
                               for (const auto& id : g.ids_of(delta)) s += (s.empty() ? "" : ",") + id;
                               return s;
                             }() +
                             "}");
    }
    if (member) out.push_back(delta);
  }
  return out;
}

bool is_dominating(const EvenGraph& g, const EvenGraph& sub) {
  VertexMask inside = g.mask_of(sub.vertex_ids());
  for (VertexIndex v : mask_indices(g.all_vertices() & ~inside)) {
    if ((g.neighbors(v) & inside) == 0) return false;
  }
  return true;
}

}  // namespace artinsigma
