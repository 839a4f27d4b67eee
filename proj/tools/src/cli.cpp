#include "artinsigma_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <bit>
#include <fstream>
#include <optional>

#include <artinsigma/errors.hpp>
#include <artinsigma/io.hpp>
#include <artinsigma/version.hpp>

#include "artinsigma_cli/report_text.hpp"

namespace artinsigma::cli {

namespace {

struct Options {
  std::string instance;
  int n = -1;
  std::optional<std::uint64_t> p;
  bool oracle = false;
  bool matrices = false;
  std::string json_path;
};

Json cliques_json(const EvenGraph& g, const std::vector<VertexMask>& cliques) {
  Json arr = Json::array();
  for (VertexMask c : cliques) arr.push_back(g.ids_of(c));
  return arr;
}

void require_valid(const EvenGraph& g) {
  for (const auto& report : {validate_even(g), validate_fc(g)})
    if (!report.ok()) throw InputError("invalid graph: " + report.violations.front().message);
}

Json classify_result(const Instance& inst) {
  const EvenGraph& g = inst.graph;
  const ChiClassification cls = classify(g, inst.character);
  Json lp = Json::object();
  Json bp = Json::object();
  for (auto p : cls.relevant_primes) {
    lp[std::to_string(p)] = to_json(living_subgraph(g, cls, LivingMode::p_local(p)));
    bp[std::to_string(p)] = cliques_json(g, enumerate_B(g, inst.character, BMode::local(p), g.size()));
  }
  return Json{{"classification", to_json(g, cls)},
              {"living", Json{{"L0", to_json(living_subgraph(g, cls, LivingMode::dead_vertices_only()))},
                              {"L", to_json(living_subgraph(g, cls, LivingMode::global()))},
                              {"Lp", std::move(lp)}}},
              {"B", Json{{"global", cliques_json(g, enumerate_B(g, inst.character, BMode::global(), g.size()))},
                         {"p-local", std::move(bp)}}}};
}

Json links_result(const Instance& inst, const Options& o) {
  const EvenGraph& g = inst.graph;
  const BMode family = o.p ? BMode::local(*o.p) : BMode::global();
  const LivingMode mode = o.p ? LivingMode::p_local(*o.p) : LivingMode::global();
  const Coefficients coeffs = o.p ? Coefficients::field(*o.p) : Coefficients::integers();
  const EvenGraph living = living_subgraph(g, inst.character, mode);
  Json entries = Json::array();
  for (VertexMask delta : enumerate_B(g, inst.character, family, static_cast<std::size_t>(o.n))) {
    const int degree = o.n - 1 - std::popcount(delta);
    const EvenGraph lk = link(g, living, delta);
    entries.push_back(Json{{"clique", g.ids_of(delta)},
                           {"required_degree", degree},
                           {"link", to_json(lk)},
                           {"cone", has_cone_vertex(lk)},
                           {"homology", to_json(reduced_homology(flag_complex(lk), coeffs, std::max(degree, -1)))}});
  }
  return Json{{"family", family.name()},
              {"living_mode", mode.name()},
              {"living", to_json(living)},
              {"coefficients", coeffs.name()},
              {"cliques", std::move(entries)}};
}

Json check_result(const Instance& inst, const Options& o) {
  const EvenGraph& g = inst.graph;
  if (o.p) return Json{{"strong_p", to_json(strong_p_n_link(g, inst.character, o.n, *o.p))}};
  Json out{{"strong", to_json(strong_n_link(g, inst.character, o.n))},
           {"strong_homotopic", to_json(strong_homotopic_n_link(g, inst.character, o.n))}};
  if (g.all_labels_two()) out["raag"] = to_json(raag_n_link(g, inst.character, o.n));
  return out;
}

Json verdict_result(const Instance& inst, const Options& o) {
  const EvenGraph& g = inst.graph;
  return Json{{"sigma", to_json(sigma_verdict(g, inst.character, o.n))},
              {"fp", to_json(fp_verdict(g, inst.character, o.n))},
              {"sigma_homotopic", to_json(homotopic_sigma_verdict(g, inst.character, o.n))}};
}

Json homology_result(const Instance& inst, const Options& o, Json& result) {
  const EvenGraph& g = inst.graph;
  const std::uint64_t p = *o.p;
  result["kernel_free_rank"] = to_json(kernel_free_rank_breakdown(g, inst.character, p, o.n));
  if (o.matrices) {
    result["differentials"] = with_field(p, [&](const auto& field) {
      return differentials_json(build_salvetti_complex(g, inst.character, field, o.n + 1));
    });
  }
  if (o.oracle) {
    const CrossCheckReport r = cross_check(g, inst.character, p, o.n);
    result["cross_check"] = to_json(r);
    result["finite_dimensional"] = r.formula_free_rank == 0;
  }
  return result;
}

void emit(const Json& report, const Options& o, std::ostream& out) {
  out << render_text(report);
  if (!o.json_path.empty()) {
    std::ofstream f(o.json_path);
    if (!f) throw InputError("cannot write " + o.json_path);
    f << report.dump(2) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sigma invariants of even Artin groups of FC type", "artinsigma"};
  app.set_version_flag("--version", std::string(version));
  app.require_subcommand(1);
  Options o;

  auto add = [&](const std::string& name, const std::string& what, bool needs_n) {
    CLI::App* sub = app.add_subcommand(name, what);
    sub->add_option("instance", o.instance, "instance JSON file")->required();
    sub->add_option("--json", o.json_path, "also write the report as JSON");
    if (needs_n) sub->add_option("--n", o.n, "degree")->required()->check(CLI::Range(0, 64));
    return sub;
  };
  add("validate", "check that the graph is even and of FC type", false);
  add("classify", "dead vertices and edges, living subgraphs and B families", false);
  add("links", "B cliques with their links and link homology", true)->add_option("--p", o.p, "prime or 0");
  add("check", "strong n-link conditions", true)->add_option("--p", o.p, "prime or 0");
  CLI::App* hom = add("homology", "free rank of the kernel homology", true);
  hom->add_option("--p", o.p, "prime or 0")->required();
  hom->add_flag("--oracle", o.oracle, "cross-check against the twisted Salvetti complex");
  hom->add_flag("--matrices", o.matrices, "dump the twisted differentials");
  add("verdict", "membership verdicts with justifications", true);

  std::vector<std::string> argv_store{"artinsigma"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Json report{{"tool", "artinsigma"}, {"version", version}, {"command", command}};
  try {
    if (o.p) require_prime_or_zero(*o.p);
    const Instance inst = load_instance(o.instance);
    Json instance = Json::object();
    if (inst.name) instance["name"] = *inst.name;
    instance["graph"] = to_json(inst.graph);
    instance["character"] = to_json(inst.graph, inst.character);
    report["instance"] = std::move(instance);
    Json params = Json::object();
    if (o.n >= 0) params["n"] = o.n;
    if (o.p) params["p"] = *o.p;
    if (o.oracle) params["oracle"] = true;
    report["parameters"] = std::move(params);

    if (command == "validate") {
      const auto even = validate_even(inst.graph);
      const auto fc = validate_fc(inst.graph);
      const bool valid = even.ok() && fc.ok();
      report["result"] = Json{{"ok", valid}, {"even", to_json(even)}, {"fc", to_json(fc)}};
      emit(report, o, out);
      return valid ? ExitCode::ok : ExitCode::input_error;
    }
    require_valid(inst.graph);
    Json result = Json::object();
    if (command == "classify") {
      result = classify_result(inst);
    } else if (command == "links") {
      result = links_result(inst, o);
    } else if (command == "check") {
      result = check_result(inst, o);
    } else if (command == "homology") {
      try {
        homology_result(inst, o, result);
      } catch (const CrossCheckMismatch& e) {
        result["cross_check"] = to_json(e.report());
        result["finite_dimensional"] = nullptr;
        report["result"] = std::move(result);
        emit(report, o, out);
        err << "error: " << e.what() << '\n';
        return ExitCode::consistency_error;
      }
    } else {
      result = verdict_result(inst, o);
    }
    report["result"] = std::move(result);
    emit(report, o, out);
    return ExitCode::ok;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::input_error;
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::consistency_error;
  }
}

}  // namespace artinsigma::cli
