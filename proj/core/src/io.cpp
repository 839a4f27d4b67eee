#include "artinsigma/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "artinsigma/errors.hpp"

namespace artinsigma {

namespace {

const Json& member(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

std::string as_string(const Json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + " must be a string");
  return j.get<std::string>();
}

int as_label(const Json& j) {
  if (!j.is_number_integer()) throw InputError("edge label must be an integer");
  auto v = j.get<long long>();
  if (v < 2 || v > (1 << 30)) throw InputError("edge label " + std::to_string(v) + " is out of range");
  return static_cast<int>(v);
}

Json ids_json(const EvenGraph& g, VertexMask m) {
  Json arr = Json::array();
  for (const auto& id : g.ids_of(m)) arr.push_back(id);
  return arr;
}

Json edge_json(const EvenGraph& g, const Edge& e) {
  return Json{{"u", g.id(e.u)}, {"v", g.id(e.v)}, {"label", e.label}};
}

Json edges_json(const EvenGraph& g, const std::vector<std::size_t>& idx) {
  Json arr = Json::array();
  for (std::size_t i : idx) arr.push_back(edge_json(g, g.edges()[i]));
  return arr;
}

}  // namespace

EvenGraph parse_graph(const Json& doc) {
  if (!doc.is_object()) throw InputError("graph document must be an object");
  const Json& vs = member(doc, "vertices");
  if (!vs.is_array()) throw InputError("'vertices' must be an array");
  std::vector<std::string> ids;
  for (const auto& v : vs) ids.push_back(as_string(v, "vertex id"));
  std::vector<EdgeSpec> edges;
  auto it = doc.find("edges");
  if (it != doc.end()) {
    if (!it->is_array()) throw InputError("'edges' must be an array");
    for (const auto& e : *it) {
      if (!e.is_object()) throw InputError("edge must be an object");
      EdgeSpec spec{as_string(member(e, "u"), "edge endpoint"), as_string(member(e, "v"), "edge endpoint"),
                    as_label(member(e, "label"))};
      if (spec.label % 2 != 0) {
        throw InputError("edge " + spec.u + "-" + spec.v + " has odd label " + std::to_string(spec.label));
      }
      edges.push_back(std::move(spec));
    }
  }
  return EvenGraph(std::move(ids), edges);
}

Character parse_character(const EvenGraph& g, const Json& values) {
  if (!values.is_object()) throw InputError("character must be an object mapping vertex ids to values");
  std::map<std::string, Rational> out;
  for (auto it = values.begin(); it != values.end(); ++it) {
    const Json& v = it.value();
    Rational r;
    if (v.is_number_integer()) {
      r = v.is_number_unsigned() ? Rational(v.get<unsigned long long>()) : Rational(v.get<long long>());
    } else if (v.is_string()) {
      r = parse_rational(v.get<std::string>());
    } else {
      throw InputError("character value for '" + it.key() + "' must be an integer or a \"p/q\" string");
    }
    out.emplace(it.key(), r);
  }
  return Character(g, out);
}

Instance parse_instance(const Json& doc) {
  if (!doc.is_object()) throw InputError("instance document must be an object");
  Instance inst;
  if (auto it = doc.find("name"); it != doc.end()) inst.name = as_string(*it, "'name'");
  auto g = doc.find("graph");
  inst.graph = parse_graph(g != doc.end() ? *g : doc);
  inst.character = parse_character(inst.graph, member(doc, "character"));
  return inst;
}

Instance parse_instance_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_instance(doc);
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

Json to_json(const Rational& r) { return rational_string(r); }

Json to_json(const EvenGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(edge_json(g, e));
  return Json{{"vertices", g.vertex_ids()}, {"edges", std::move(edges)}};
}

Json to_json(const EvenGraph& g, const Character& chi) {
  Json out = Json::object();
  for (VertexIndex v = 0; v < g.size(); ++v) out[g.id(v)] = to_json(chi.vertex_value(v));
  return out;
}

Json to_json(const ValidationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back(Json{{"kind", v.kind}, {"message", v.message}, {"vertices", v.vertices}});
  }
  return Json{{"ok", r.ok()}, {"violations", std::move(violations)}};
}

Json to_json(const EvenGraph& g, const ChiClassification& cls) {
  Json p_dead = Json::object();
  for (const auto& [p, idx] : cls.p_dead_edges) p_dead[std::to_string(p)] = edges_json(g, idx);
  Json primes = Json::array();
  for (auto p : cls.relevant_primes) primes.push_back(p);
  return Json{{"zero_character", cls.zero_character},
              {"dead_vertices", ids_json(g, cls.dead_vertices)},
              {"dead_edges", edges_json(g, cls.dead_edges)},
              {"p_dead_edges", std::move(p_dead)},
              {"relevant_primes", std::move(primes)}};
}

Json to_json(const DegreeHomology& h) {
  Json torsion = Json::array();
  for (const auto& t : h.torsion) torsion.push_back(t.str());
  return Json{{"degree", h.degree}, {"betti", h.betti}, {"torsion", std::move(torsion)}};
}

Json to_json(const HomologyProfile& p) {
  Json degrees = Json::array();
  for (const auto& h : p.degrees) degrees.push_back(to_json(h));
  return Json{{"coefficients", p.coefficients.name()}, {"reduced", std::move(degrees)}};
}

Json to_json(const Witness& w) {
  Json out{{"clique", w.clique_ids},
           {"required_degree", w.required_degree},
           {"link", to_json(w.link)},
           {"method", to_string(w.method)},
           {"status", to_string(w.status)}};
  out["failing_degree"] = w.failing_degree ? Json(*w.failing_degree) : Json(nullptr);
  return out;
}

Json to_json(const ConditionReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
  return Json{{"variant", r.parameters.variant},
              {"n", r.parameters.n},
              {"coefficients", r.parameters.coefficients.name()},
              {"living", r.parameters.living.name()},
              {"family", r.parameters.family.name()},
              {"holds", to_string(r.holds)},
              {"witnesses", std::move(witnesses)}};
}

Json to_json(const FreeRankBreakdown& b) {
  Json terms = Json::array();
  for (const auto& t : b.terms) {
    terms.push_back(Json{{"clique", t.clique_ids},
                         {"degree", t.degree},
                         {"link", to_json(t.link)},
                         {"dimension", t.dimension}});
  }
  return Json{{"p", b.p}, {"n", b.n}, {"free_rank", b.total}, {"terms", std::move(terms)}};
}

Json to_json(const Verdict& v) {
  Json just = Json::array();
  for (const auto& j : v.justifications) {
    just.push_back(Json{{"rule", j.rule}, {"statement", j.statement}, {"detail", j.detail}});
  }
  return Json{{"subject", v.subject},
              {"degree", v.degree},
              {"status", to_string(v.status)},
              {"justifications", std::move(just)}};
}

Json to_json(const KernelDimension& k) {
  return Json{{"p", k.p}, {"n", k.n}, {"free_rank", k.free_rank}, {"finite", k.finite()}};
}

Json to_json(const CrossCheckReport& r) {
  Json module = std::visit([](const auto& m) { return to_json(m); }, r.module);
  return Json{{"p", r.p},
              {"n", r.n},
              {"oracle_free_rank", r.oracle_free_rank},
              {"formula_free_rank", r.formula_free_rank},
              {"agrees", r.agrees()},
              {"module", std::move(module)}};
}

}  // namespace artinsigma
