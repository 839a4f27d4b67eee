#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artinsigma/chi_analysis.hpp"
#include "artinsigma/field.hpp"
#include "artinsigma/flag_homology.hpp"
#include "artinsigma/graph.hpp"

namespace artinsigma {

enum class Holds { No, Yes, Unknown };

std::string to_string(Holds h);

struct Witness {
  enum class Status { Ok, Fails, Unknown };
  enum class Method {
    Cone,          // link has a cone vertex: contractible
    Homology,      // exact reduced homology computation
    Nonempty,      // required degree -1
    Connectivity,  // required degree 0, exact
    Unresolved     // homotopic degree >= 1 that homology cannot settle
  };

  VertexMask clique = 0;  // in the indexing of the input graph
  std::vector<std::string> clique_ids;
  int required_degree = -1;
  EvenGraph link;
  Status status = Status::Ok;
  Method method = Method::Homology;
  /// Lowest degree with nonvanishing reduced homology, when status == Fails.
  std::optional<int> failing_degree;
};

std::string to_string(Witness::Status s);
std::string to_string(Witness::Method m);

struct ConditionParameters {
  std::string variant;  // "strong", "strong-p", "strong-homotopic", "raag"
  int n = 0;
  Coefficients coefficients;
  LivingMode living;
  BMode family;
};

struct ConditionReport {
  Holds holds = Holds::Yes;
  std::vector<Witness> witnesses;
  ConditionParameters parameters;
};

/// Every clique D in B^chi with |D| <= n has a flag link in L^chi that is
/// (n - 1 - |D|)-acyclic over Z. Requires an even FC graph and chi != 0.
ConditionReport strong_n_link(const EvenGraph& g, const Character& chi, int n);

/// p-local version: B_p^chi, L_p^chi and coefficients in F_p (Q for p = 0).
ConditionReport strong_p_n_link(const EvenGraph& g, const Character& chi, int n, std::uint64_t p);

/// Three-valued homotopic variant: degrees -1 and 0 are decided exactly, cone
/// links are contractible, and otherwise a homological failure refutes while
/// a homological success leaves the witness unresolved.
ConditionReport strong_homotopic_n_link(const EvenGraph& g, const Character& chi, int n);

/// Link condition for right-angled Artin groups: every clique of dead
/// vertices D with |D| <= n has a flag link in L_0 that is
/// (n - 1 - |D|)-acyclic over Z. Throws InputError unless all labels are 2.
ConditionReport raag_n_link(const EvenGraph& g, const Character& chi, int n);

struct FreeRankTerm {
  VertexMask clique = 0;
  std::vector<std::string> clique_ids;
  int degree = -1;
  EvenGraph link;
  std::size_t dimension = 0;
};

struct FreeRankBreakdown {
  std::uint64_t p = 0;
  int n = 0;
  std::size_t total = 0;
  /// One term per clique of B_p^chi with |X| <= n, including zero terms.
  std::vector<FreeRankTerm> terms;
};

/// Sum over X in B_p^chi with |X| <= n of dim H̄_{n-1-|X|}(flag lk_{L_p}(X); F_p).
FreeRankBreakdown kernel_free_rank_breakdown(const EvenGraph& g, const Character& chi, std::uint64_t p, int n);
std::size_t kernel_free_rank(const EvenGraph& g, const Character& chi, std::uint64_t p, int n);

/// Throws InputError unless g is even and of FC type.
void require_even_fc(const EvenGraph& g);

}  // namespace artinsigma
