#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "artinsigma/chi_analysis.hpp"
#include "artinsigma/flag_homology.hpp"
#include "artinsigma/graph.hpp"
#include "artinsigma/link_conditions.hpp"
#include "artinsigma/salvetti.hpp"
#include "artinsigma/sigma_engine.hpp"

namespace artinsigma {

using Json = nlohmann::ordered_json;

struct Instance {
  std::optional<std::string> name;
  EvenGraph graph;
  Character character;
};

/// {"vertices": [...], "edges": [{"u", "v", "label"}, ...]}. Rejects repeated
/// edges and labels that are not even integers >= 2.
EvenGraph parse_graph(const Json& doc);

/// {"a": 1, "b": "-1/2", ...}: integers or rational strings, one per vertex.
Character parse_character(const EvenGraph& g, const Json& values);

/// Either {"name"?, "vertices", "edges", "character"} or
/// {"name"?, "graph": {...}, "character": {...}}.
Instance parse_instance(const Json& doc);
Instance parse_instance_text(std::string_view text);
Instance load_instance(const std::filesystem::path& path);

Json to_json(const Rational& r);
Json to_json(const EvenGraph& g);
Json to_json(const EvenGraph& g, const Character& chi);
Json to_json(const ValidationReport& r);
Json to_json(const EvenGraph& g, const ChiClassification& cls);
Json to_json(const DegreeHomology& h);
Json to_json(const HomologyProfile& p);
Json to_json(const Witness& w);
Json to_json(const ConditionReport& r);
Json to_json(const FreeRankBreakdown& b);
Json to_json(const Verdict& v);
Json to_json(const KernelDimension& k);
Json to_json(const CrossCheckReport& r);

inline Json field_element_json(const RationalField&, const Rational& x) { return to_json(x); }
inline Json field_element_json(const PrimeField&, std::uint64_t x) { return x; }

template <class F>
Json to_json(const LaurentPoly<F>& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(field_element_json(p.field(), c));
  return Json{{"offset", p.offset()}, {"coeffs", std::move(coeffs)}};
}

template <class F>
Json to_json(const ModulePresentation<F>& m) {
  Json torsion = Json::array();
  for (const auto& t : m.torsion) torsion.push_back(to_json(t));
  return Json{{"free_rank", m.free_rank}, {"torsion", std::move(torsion)}};
}

/// Differentials D_1..D_max as nested arrays of Laurent polynomials with the
/// clique basis of each degree.
template <class F>
Json differentials_json(const TwistedComplex<F>& cx) {
  Json out = Json::array();
  auto names = [&](const std::vector<VertexMask>& basis) {
    Json arr = Json::array();
    for (VertexMask m : basis) {
      Json ids = Json::array();
      for (VertexIndex i : mask_indices(m)) ids.push_back(cx.vertex_order[i]);
      arr.push_back(std::move(ids));
    }
    return arr;
  };
  for (std::size_t n = 1; n < cx.differentials.size(); ++n) {
    const auto& d = cx.differentials[n];
    Json rows = Json::array();
    for (std::size_t r = 0; r < d.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < d.cols(); ++c) row.push_back(to_json(d(r, c)));
      rows.push_back(std::move(row));
    }
    out.push_back(Json{{"degree", n},
                       {"rows", names(cx.basis[n - 1])},
                       {"cols", names(cx.basis[n])},
                       {"entries", std::move(rows)}});
  }
  return out;
}

}  // namespace artinsigma
