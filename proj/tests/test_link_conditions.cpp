#include <doctest.h>

#include <artinsigma/errors.hpp>
#include <artinsigma/link_conditions.hpp>

#include "test_support.hpp"

using namespace artinsigma;
using testing::chi_of;

namespace {

bool strong_one_link_reformulated(const EvenGraph& g, const Character& chi) {
  auto living = living_subgraph(g, chi, LivingMode::global());
  return is_connected(living) && is_dominating(g, living);
}

}  // namespace

TEST_CASE("square with diagonal satisfies every strong link condition") {
  auto f = testing::square_with_diagonal();
  for (int n = 0; n <= 4; ++n) {
    auto r = strong_n_link(f.graph, f.chi, n);
    CHECK(r.holds == Holds::Yes);
    for (const auto& w : r.witnesses) CHECK(w.status == Witness::Status::Ok);
  }
  auto r3 = strong_n_link(f.graph, f.chi, 3);
  REQUIRE(r3.witnesses.size() == 3);
  for (const auto& w : r3.witnesses) CHECK(w.method == Witness::Method::Cone);
  CHECK(r3.witnesses[1].clique_ids == std::vector<std::string>{"c"});
  CHECK(r3.witnesses[2].required_degree == 0);
}

TEST_CASE("square without diagonal fails at the empty clique") {
  auto f = testing::square_without_diagonal();
  auto r = strong_n_link(f.graph, f.chi, 1);
  CHECK(r.holds == Holds::No);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses[0].clique == 0);
  CHECK(r.witnesses[0].status == Witness::Status::Fails);
  CHECK(r.witnesses[0].failing_degree == 0);
  CHECK(strong_homotopic_n_link(f.graph, f.chi, 1).holds == Holds::No);
}

TEST_CASE("homotopic variant") {
  auto f = testing::square_with_diagonal();
  CHECK(strong_homotopic_n_link(f.graph, f.chi, 1).holds == Holds::Yes);
  auto r3 = strong_homotopic_n_link(f.graph, f.chi, 3);
  CHECK(r3.holds == Holds::Yes);
  // C5 is connected and acyclic in degree 0, but has H_1: degree 2 fails.
  auto names = testing::vertex_names(5);
  std::vector<EdgeSpec> cycle;
  for (std::size_t i = 0; i < 5; ++i) cycle.push_back({names[i], names[(i + 1) % 5], 2});
  EvenGraph c5(names, cycle);
  auto ones = chi_of(c5, {1, 1, 1, 1, 1});
  CHECK(strong_homotopic_n_link(c5, ones, 1).holds == Holds::Yes);
  CHECK(strong_homotopic_n_link(c5, ones, 2).holds == Holds::No);
  // Octahedron boundary: a 2-sphere, acyclic through degree 1, no cone vertex.
  std::vector<EdgeSpec> oct;
  auto six = testing::vertex_names(6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (j != i + 3) oct.push_back({six[i], six[j], 2});
  EvenGraph o(six, oct);
  auto chi = chi_of(o, {1, 1, 1, 1, 1, 1});
  auto h = strong_homotopic_n_link(o, chi, 2);
  CHECK(h.holds == Holds::Unknown);
  CHECK(h.witnesses[0].method == Witness::Method::Unresolved);
  CHECK(strong_n_link(o, chi, 2).holds == Holds::Yes);
}

TEST_CASE("dihedral products and p-local conditions") {
  auto d46 = testing::dihedral_product(4, 6);
  auto r = strong_n_link(d46.graph, d46.chi, 2);
  CHECK(r.holds == Holds::No);
  CHECK(r.witnesses[0].clique == 0);
  CHECK(r.witnesses[0].failing_degree == 1);
  for (std::uint64_t p : {0, 2, 3, 5}) CHECK(strong_p_n_link(d46.graph, d46.chi, 2, p).holds == Holds::Yes);
  auto d44 = testing::dihedral_product(4, 4);
  CHECK(strong_p_n_link(d44.graph, d44.chi, 2, 2).holds == Holds::No);
  CHECK(kernel_free_rank(d44.graph, d44.chi, 2, 2) == 1);
  auto breakdown = kernel_free_rank_breakdown(d44.graph, d44.chi, 2, 2);
  REQUIRE(breakdown.terms.size() == 3);
  CHECK(breakdown.terms[0].dimension == 1);
  CHECK(breakdown.terms[1].dimension == 0);
  CHECK(breakdown.terms[2].dimension == 0);
  CHECK_THROWS_AS(strong_p_n_link(d44.graph, d44.chi, 2, 6), InputError);
  CHECK_THROWS_AS(kernel_free_rank(d44.graph, d44.chi, 9, 2), InputError);
}

TEST_CASE("dihedral kernel free rank") {
  for (int half : {2, 3, 4, 6})
    for (std::uint64_t p : {0, 2, 3, 5}) {
      auto d = testing::dihedral(2 * half);
      CHECK(kernel_free_rank(d.graph, d.chi, p, 1) == (p != 0 && half % static_cast<int>(p) == 0 ? 1u : 0u));
    }
}

TEST_CASE("right-angled condition") {
  EvenGraph two({"a", "b"}, {});
  CHECK(raag_n_link(two, chi_of(two, {1, 1}), 1).holds == Holds::No);
  auto names = testing::vertex_names(4);
  EvenGraph square(names, {{names[0], names[1], 2}, {names[1], names[2], 2}, {names[2], names[3], 2},
                           {names[3], names[0], 2}});
  CHECK(raag_n_link(square, chi_of(square, {1, 1, 1, 1}), 1).holds == Holds::Yes);
  EvenGraph one({"a"}, {});
  for (int n = 0; n < 4; ++n) CHECK(raag_n_link(one, chi_of(one, {1}), n).holds == Holds::Yes);
  auto d = testing::dihedral(4);
  CHECK_THROWS_AS(raag_n_link(d.graph, d.chi, 1), InputError);
}

TEST_CASE("zero characters and invalid graphs are rejected") {
  auto d = testing::dihedral(4);
  auto zero = chi_of(d.graph, {0, 0});
  CHECK_THROWS_AS(strong_n_link(d.graph, zero, 1), InputError);
  CHECK_THROWS_AS(strong_homotopic_n_link(d.graph, zero, 1), InputError);
  CHECK_NOTHROW(kernel_free_rank(d.graph, zero, 2, 1));
  EvenGraph bad({"a", "b", "c"}, {{"a", "b", 4}, {"b", "c", 4}, {"a", "c", 2}});
  CHECK_THROWS_AS(strong_n_link(bad, chi_of(bad, {1, 1, 1}), 1), InputError);
  CHECK_THROWS_AS(strong_n_link(d.graph, d.chi, -1), InputError);
}

TEST_CASE("condition reports are internally consistent on random inputs") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 150; ++i) {
    auto g = testing::random_fc_graph(rng);
    auto chi = testing::random_character(rng, g);
    std::vector<ConditionReport> reports;
    for (int n = 0; n <= 3; ++n) {
      reports.push_back(strong_n_link(g, chi, n));
      const auto& r = reports.back();
      bool any_fail = false;
      for (const auto& w : r.witnesses) {
        CHECK(std::popcount(w.clique) <= n);
        CHECK(w.required_degree == n - 1 - std::popcount(w.clique));
        if (w.status == Witness::Status::Fails) {
          any_fail = true;
          CHECK(w.failing_degree.has_value());
        }
        CHECK(w.status != Witness::Status::Unknown);
      }
      CHECK((r.holds == Holds::No) == any_fail);
      auto h = strong_homotopic_n_link(g, chi, n);
      if (h.holds == Holds::Yes) CHECK(r.holds == Holds::Yes);
      if (r.holds == Holds::No) CHECK(h.holds == Holds::No);
    }
    // Holding at level n implies holding at every lower level.
    for (int n = 1; n <= 3; ++n)
      if (reports[static_cast<std::size_t>(n)].holds == Holds::Yes)
        CHECK(reports[static_cast<std::size_t>(n - 1)].holds == Holds::Yes);
    CHECK((reports[1].holds == Holds::Yes) == strong_one_link_reformulated(g, chi));
  }
}

TEST_CASE("right-angled and general conditions agree on right-angled inputs") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 150; ++i) {
    auto g = testing::random_raag(rng);
    auto chi = testing::random_character(rng, g);
    for (int n = 0; n <= 3; ++n) CHECK(raag_n_link(g, chi, n).holds == strong_n_link(g, chi, n).holds);
  }
}

TEST_CASE("kernel free rank is invariant under positive scaling") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    auto g = testing::random_fc_graph(rng);
    auto chi = testing::random_character(rng, g);
    auto scaled = chi.scaled(Rational(3, 7));
    for (std::uint64_t p : {0, 2, 3})
      for (int n = 0; n <= 3; ++n) CHECK(kernel_free_rank(g, chi, p, n) == kernel_free_rank(g, scaled, p, n));
  }
}
