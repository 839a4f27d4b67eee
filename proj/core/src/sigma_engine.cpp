#include "artinsigma/sigma_engine.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <sstream>

#include "artinsigma/errors.hpp"
#include "artinsigma/link_conditions.hpp"
#include "artinsigma/salvetti.hpp"

namespace artinsigma {

std::string to_string(Membership m) {
  switch (m) {
    case Membership::In: return "IN";
    case Membership::NotIn: return "NOT_IN";
    case Membership::Unknown: return "UNKNOWN";
  }
  return "?";
}

namespace {

std::string clique_name(const std::vector<std::string>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + ids[i];
  return out + "}";
}

std::string describe_failure(const ConditionReport& r) {
  for (const auto& w : r.witnesses) {
    if (w.status != Witness::Status::Fails) continue;
    std::ostringstream s;
    s << "clique " << clique_name(w.clique_ids) << " has a link with nonzero reduced homology in degree "
      << *w.failing_degree << " (required acyclic up to " << w.required_degree << ")";
    return s.str();
  }
  return "no failing witness";
}

struct RuleOutcome {
  std::optional<Membership> fired;
  Justification why;
};

RuleOutcome strong_link_rule(const EvenGraph& g, const Character& chi, int n) {
  const auto report = strong_n_link(g, chi, n);
  RuleOutcome out;
  out.why.rule = rules::strong_link;
  out.why.statement = "the strong n-link condition over Z implies membership";
  if (report.holds == Holds::Yes) {
    out.fired = Membership::In;
    out.why.detail = "all " + std::to_string(report.witnesses.size()) + " links are acyclic in the required range";
  } else {
    out.why.detail = "condition fails: " + describe_failure(report);
  }
  return out;
}

RuleOutcome p_local_rule(const EvenGraph& g, const Character& chi, const ChiClassification& cls, int n) {
  RuleOutcome out;
  out.why.rule = rules::p_local_obstruction;
  out.why.statement = "if L_p equals L and the strong p-n-link condition fails, [chi] is not a member";
  const EvenGraph living = living_subgraph(g, cls, LivingMode::global());
  std::vector<std::uint64_t> primes{0};
  primes.insert(primes.end(), cls.relevant_primes.begin(), cls.relevant_primes.end());
  std::vector<std::string> notes;
  for (std::uint64_t p : primes) {
    const std::string label = "p=" + std::to_string(p);
    if (!(living_subgraph(g, cls, LivingMode::p_local(p)) == living)) {
      notes.push_back(label + ": L_p differs from L");
      continue;
    }
    const auto report = strong_p_n_link(g, chi, n, p);
    if (report.holds == Holds::No) {
      out.fired = Membership::NotIn;
      out.why.detail = label + ": L_p equals L and " + describe_failure(report);
      return out;
    }
    notes.push_back(label + ": L_p equals L but the condition holds");
  }
  std::string detail;
  for (std::size_t i = 0; i < notes.size(); ++i) detail += (i ? "; " : "") + notes[i];
  out.why.detail = detail;
  return out;
}

RuleOutcome odd_cycle_rule(const EvenGraph& g, const ChiClassification& cls, int n) {
  RuleOutcome out;
  out.why.rule = rules::sigma1_odd_cycle;
  out.why.statement =
      "if every cycle of label > 2 edges has odd length, degree 1 membership is equivalent to L being connected and "
      "dominating";
  if (n != 1) {
    out.why.detail = "applies only in degree 1";
    return out;
  }
  if (!odd_cycle_condition(g)) {
    out.why.detail = "the label > 2 subgraph contains an even cycle";
    return out;
  }
  const EvenGraph living = living_subgraph(g, cls, LivingMode::global());
  const bool connected = is_connected(living);
  const bool dominating = is_dominating(g, living);
  out.fired = connected && dominating ? Membership::In : Membership::NotIn;
  out.why.detail = std::string("L is ") + (connected ? "connected" : "disconnected") + " and " +
                   (dominating ? "dominating" : "not dominating");
  return out;
}

RuleOutcome product_rule(const EvenGraph& g, const Character& chi, int n) {
  RuleOutcome out;
  out.why.rule = rules::clique_product;
  out.why.statement =
      "a complete even FC graph gives a product of dihedral and cyclic groups, decided by the product formula";
  if (!g.is_clique(g.all_vertices())) {
    out.why.detail = "the graph is not complete";
    return out;
  }
  const bool member = product_sigma_member(g, g.all_vertices(), chi, n);
  out.fired = member ? Membership::In : Membership::NotIn;
  std::size_t supported = 0;
  for (const auto& e : g.edges())
    if (e.label > 2 && (chi.vertex_value(e.u) != 0 || chi.vertex_value(e.v) != 0)) ++supported;
  out.why.detail = member ? "the closed form gives membership"
                          : "chi kills every cyclic factor and every dihedral center, with " +
                                std::to_string(supported) + " supported dihedral factors";
  return out;
}

void require_sigma_input(const EvenGraph& g, const Character& chi, int n) {
  require_even_fc(g);
  if (chi.size() != g.size()) throw InputError("character domain does not match the graph");
  if (chi.is_zero()) throw InputError("the zero character has no Sigma class");
  if (n < 0) throw InputError("n must be nonnegative");
}

}  // namespace

Verdict sigma_verdict(const EvenGraph& g, const Character& chi, int n) {
  require_sigma_input(g, chi, n);
  const ChiClassification cls = classify(g, chi);
  const RuleOutcome outcomes[] = {strong_link_rule(g, chi, n), p_local_rule(g, chi, cls, n),
                                  odd_cycle_rule(g, cls, n), product_rule(g, chi, n)};
  Verdict v;
  v.subject = "sigma";
  v.degree = n;
  bool in = false;
  bool not_in = false;
  for (const auto& o : outcomes) {
    if (!o.fired) continue;
    (*o.fired == Membership::In ? in : not_in) = true;
  }
  if (in && not_in) {
    std::string msg = "rules disagree:";
    for (const auto& o : outcomes)
      if (o.fired) msg += " " + o.why.rule + "=" + to_string(*o.fired);
    throw ConsistencyError(msg);
  }
  v.status = in ? Membership::In : not_in ? Membership::NotIn : Membership::Unknown;
  for (const auto& o : outcomes)
    if (v.status == Membership::Unknown || o.fired) v.justifications.push_back(o.why);
  return v;
}

Verdict fp_verdict(const EvenGraph& g, const Character& chi, int n) {
  Verdict v = sigma_verdict(g, chi, n);
  v.subject = "fp";
  v.justifications.push_back({rules::symmetry,
                              "the invariant is symmetric under chi -> -chi, so ker chi is FP_n exactly when [chi] "
                              "is a member",
                              "status forwarded from the degree " + std::to_string(n) + " verdict"});
  return v;
}

Verdict homotopic_sigma_verdict(const EvenGraph& g, const Character& chi, int n) {
  require_sigma_input(g, chi, n);
  const auto report = strong_homotopic_n_link(g, chi, n);
  Verdict v;
  v.subject = "sigma-homotopic";
  v.degree = n;
  Justification j{rules::homotopic_link, "the strong homotopic n-link condition implies membership", ""};
  if (report.holds == Holds::Yes) {
    v.status = Membership::In;
    j.detail = "every link is nonempty, connected or a cone as required";
  } else if (report.holds == Holds::No) {
    j.detail = "condition fails: " + describe_failure(report);
  } else {
    std::size_t unresolved = 0;
    for (const auto& w : report.witnesses)
      if (w.status == Witness::Status::Unknown) ++unresolved;
    j.detail = std::to_string(unresolved) + " links are acyclic but their connectivity is not decided";
  }
  v.justifications.push_back(std::move(j));
  return v;
}

bool dihedral_sigma(int label, const Rational& m_x, const Rational& m_y, int n) {
  if (label < 2) throw InputError("dihedral_sigma: label must be at least 2");
  if (m_x == 0 && m_y == 0) throw InputError("dihedral_sigma: zero character");
  if (n < 0) throw InputError("n must be nonnegative");
  if (label == 2 || label % 2 == 1 || n == 0) return true;
  return m_x + m_y != 0;
}

bool product_sigma_member(const EvenGraph& g, VertexMask delta, const Character& chi, int m) {
  if (!g.is_clique(delta)) throw InputError("product_sigma_member: vertex set is not a clique");
  if (m < 0) throw InputError("m must be nonnegative");
  if (chi.size() != g.size()) throw InputError("character domain does not match the graph");
  VertexMask covered = 0;
  std::vector<const Edge*> dihedral;
  for (const auto& e : g.edges()) {
    if (e.label > 2 && (e.mask() & ~delta) == 0) {
      if (covered & e.mask()) throw InputError("product_sigma_member: clique violates the FC condition");
      covered |= e.mask();
      dihedral.push_back(&e);
    }
  }
  bool zero = true;
  for (VertexIndex v : mask_indices(delta))
    if (chi.vertex_value(v) != 0) zero = false;
  if (zero) throw InputError("product_sigma_member: character vanishes on the clique");
  for (VertexIndex v : mask_indices(delta & ~covered))
    if (chi.vertex_value(v) != 0) return true;
  int supported = 0;
  for (const Edge* e : dihedral) {
    if (chi.edge_value(*e) != 0) return true;
    if (chi.vertex_value(e->u) != 0) ++supported;
  }
  return supported > m;
}

bool odd_cycle_condition(const EvenGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::pair<VertexIndex, std::size_t>>> adj(n);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if (e.label <= 2) continue;
    adj[e.u].push_back({e.v, i});
    adj[e.v].push_back({e.u, i});
  }
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<std::size_t> stack;
  int counter = 0;
  bool ok = true;

  auto close_block = [&](std::size_t until) {
    VertexMask verts = 0;
    std::size_t edges = 0;
    for (;;) {
      std::size_t e = stack.back();
      stack.pop_back();
      verts |= g.edges()[e].mask();
      ++edges;
      if (e == until) break;
    }
    const auto nv = static_cast<std::size_t>(std::popcount(verts));
    if (edges == 1) return;
    if (edges != nv || nv % 2 == 0) ok = false;
  };

  std::function<void(VertexIndex, std::optional<std::size_t>)> dfs = [&](VertexIndex u,
                                                                        std::optional<std::size_t> via) {
    order[u] = low[u] = counter++;
    for (auto [w, e] : adj[u]) {
      if (via && e == *via) continue;
      if (order[w] == -1) {
        stack.push_back(e);
        dfs(w, e);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= order[u]) close_block(e);
      } else if (order[w] < order[u]) {
        stack.push_back(e);
        low[u] = std::min(low[u], order[w]);
      }
    }
  };
  for (VertexIndex v = 0; v < n && ok; ++v)
    if (order[v] == -1) dfs(v, std::nullopt);
  return ok;
}

KernelDimension kernel_homology_dimension(const EvenGraph& g, const Character& chi, std::uint64_t p, int n) {
  const auto report = cross_check(g, chi, p, n);
  return {p, n, report.formula_free_rank};
}

}  // namespace artinsigma
