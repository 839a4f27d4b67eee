#include "artinsigma/link_conditions.hpp"

#include <bit>

#include "artinsigma/errors.hpp"

namespace artinsigma {

std::string to_string(Holds h) {
  switch (h) {
    case Holds::No: return "false";
    case Holds::Yes: return "true";
    case Holds::Unknown: return "unknown";
  }
  return "?";
}

std::string to_string(Witness::Status s) {
  switch (s) {
    case Witness::Status::Ok: return "ok";
    case Witness::Status::Fails: return "fails";
    case Witness::Status::Unknown: return "unknown";
  }
  return "?";
}

std::string to_string(Witness::Method m) {
  switch (m) {
    case Witness::Method::Cone: return "cone";
    case Witness::Method::Homology: return "homology";
    case Witness::Method::Nonempty: return "nonempty";
    case Witness::Method::Connectivity: return "connectivity";
    case Witness::Method::Unresolved: return "unresolved";
  }
  return "?";
}

void require_even_fc(const EvenGraph& g) {
  auto even = validate_even(g);
  if (!even.ok()) throw InputError(even.violations.front().message);
  auto fc = validate_fc(g);
  if (!fc.ok()) throw InputError(fc.violations.front().message);
}

namespace {

void require_nonzero(const EvenGraph& g, const Character& chi) {
  if (chi.size() != g.size()) throw InputError("character domain does not match the graph");
  if (chi.is_zero()) throw InputError("the zero character has no Sigma class");
}

void require_degree(int n) {
  if (n < 0) throw InputError("n must be nonnegative");
}

Witness make_witness(const EvenGraph& g, const EvenGraph& living, VertexMask delta, int n) {
  Witness w;
  w.clique = delta;
  w.clique_ids = g.ids_of(delta);
  w.required_degree = n - 1 - std::popcount(delta);
  w.link = link(g, living, delta);
  return w;
}

// Homological acyclicity up to w.required_degree; fills status/method.
void decide_homologically(Witness& w, Coefficients coeffs) {
  if (w.required_degree <= -2) {
    w.status = Witness::Status::Ok;
    return;
  }
  if (has_cone_vertex(w.link)) {
    w.status = Witness::Status::Ok;
    w.method = Witness::Method::Cone;
    return;
  }
  w.method = Witness::Method::Homology;
  auto profile = reduced_homology(flag_complex(w.link), coeffs, w.required_degree);
  for (const auto& h : profile.degrees) {
    if (!h.vanishes()) {
      w.status = Witness::Status::Fails;
      w.failing_degree = h.degree;
      return;
    }
  }
  w.status = Witness::Status::Ok;
}

void summarize(ConditionReport& report) {
  bool unknown = false;
  for (const auto& w : report.witnesses) {
    if (w.status == Witness::Status::Fails) {
      report.holds = Holds::No;
      return;
    }
    if (w.status == Witness::Status::Unknown) unknown = true;
  }
  report.holds = unknown ? Holds::Unknown : Holds::Yes;
}

ConditionReport homological_condition(const EvenGraph& g, const Character& chi, int n, BMode family,
                                      LivingMode living_mode, Coefficients coeffs, std::string variant) {
  ConditionReport report;
  report.parameters = {std::move(variant), n, coeffs, living_mode, family};
  const EvenGraph living = living_subgraph(g, chi, living_mode);
  for (VertexMask delta : enumerate_B(g, chi, family, static_cast<std::size_t>(n))) {
    Witness w = make_witness(g, living, delta, n);
    decide_homologically(w, coeffs);
    report.witnesses.push_back(std::move(w));
  }
  summarize(report);
  return report;
}

}  // namespace

ConditionReport strong_n_link(const EvenGraph& g, const Character& chi, int n) {
  require_even_fc(g);
  require_nonzero(g, chi);
  require_degree(n);
  return homological_condition(g, chi, n, BMode::global(), LivingMode::global(), Coefficients::integers(),
                               "strong");
}

ConditionReport strong_p_n_link(const EvenGraph& g, const Character& chi, int n, std::uint64_t p) {
  require_prime_or_zero(p);
  require_even_fc(g);
  require_nonzero(g, chi);
  require_degree(n);
  return homological_condition(g, chi, n, BMode::local(p), LivingMode::p_local(p), Coefficients::field(p),
                               "strong-p");
}

ConditionReport strong_homotopic_n_link(const EvenGraph& g, const Character& chi, int n) {
  require_even_fc(g);
  require_nonzero(g, chi);
  require_degree(n);
  ConditionReport report;
  report.parameters = {"strong-homotopic", n, Coefficients::integers(), LivingMode::global(), BMode::global()};
  const EvenGraph living = living_subgraph(g, chi, LivingMode::global());
  for (VertexMask delta : enumerate_B(g, chi, BMode::global(), static_cast<std::size_t>(n))) {
    Witness w = make_witness(g, living, delta, n);
    const int d = w.required_degree;
    if (d <= -2) {
      w.status = Witness::Status::Ok;
    } else if (has_cone_vertex(w.link)) {
      w.status = Witness::Status::Ok;
      w.method = Witness::Method::Cone;
    } else if (d == -1) {
      w.method = Witness::Method::Nonempty;
      w.status = w.link.empty() ? Witness::Status::Fails : Witness::Status::Ok;
      if (w.link.empty()) w.failing_degree = -1;
    } else if (d == 0) {
      w.method = Witness::Method::Connectivity;
      if (w.link.empty()) {
        w.status = Witness::Status::Fails;
        w.failing_degree = -1;
      } else if (!is_connected(w.link)) {
        w.status = Witness::Status::Fails;
        w.failing_degree = 0;
      } else {
        w.status = Witness::Status::Ok;
      }
    } else {
      decide_homologically(w, Coefficients::integers());
      if (w.status == Witness::Status::Ok) {
        w.status = Witness::Status::Unknown;
        w.method = Witness::Method::Unresolved;
      }
    }
    report.witnesses.push_back(std::move(w));
  }
  summarize(report);
  return report;
}

ConditionReport raag_n_link(const EvenGraph& g, const Character& chi, int n) {
  if (!g.all_labels_two()) throw InputError("raag_n_link: every edge label must be 2");
  require_nonzero(g, chi);
  require_degree(n);
  ConditionReport report;
  report.parameters = {"raag", n, Coefficients::integers(), LivingMode::dead_vertices_only(), BMode::global()};
  const ChiClassification cls = classify(g, chi);
  const EvenGraph living = living_subgraph(g, cls, LivingMode::dead_vertices_only());
  for (VertexMask delta : enumerate_cliques(g, static_cast<std::size_t>(n))) {
    if ((delta & ~cls.dead_vertices) != 0) continue;
    Witness w = make_witness(g, living, delta, n);
    decide_homologically(w, Coefficients::integers());
    report.witnesses.push_back(std::move(w));
  }
  summarize(report);
  return report;
}

FreeRankBreakdown kernel_free_rank_breakdown(const EvenGraph& g, const Character& chi, std::uint64_t p, int n) {
  require_prime_or_zero(p);
  require_even_fc(g);
  require_degree(n);
  if (chi.size() != g.size()) throw InputError("character domain does not match the graph");
  FreeRankBreakdown out;
  out.p = p;
  out.n = n;
  const Coefficients coeffs = Coefficients::field(p);
  const EvenGraph living = living_subgraph(g, chi, LivingMode::p_local(p));
  for (VertexMask x : enumerate_B(g, chi, BMode::local(p), static_cast<std::size_t>(n))) {
    FreeRankTerm term;
    term.clique = x;
    term.clique_ids = g.ids_of(x);
    term.degree = n - 1 - std::popcount(x);
    term.link = link(g, living, x);
    auto profile = reduced_homology(flag_complex(term.link), coeffs, term.degree);
    term.dimension = profile.at(term.degree).betti;
    out.total += term.dimension;
    out.terms.push_back(std::move(term));
  }
  return out;
}

std::size_t kernel_free_rank(const EvenGraph& g, const Character& chi, std::uint64_t p, int n) {
  return kernel_free_rank_breakdown(g, chi, p, n).total;
}

}  // namespace artinsigma
