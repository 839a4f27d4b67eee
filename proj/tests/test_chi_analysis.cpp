#include <doctest.h>

#include <artinsigma/chi_analysis.hpp>
#include <artinsigma/errors.hpp>

#include "test_support.hpp"

using namespace artinsigma;
using testing::chi_of;

TEST_CASE("character construction and scaling") {
  EvenGraph g({"a", "b"}, {{"a", "b", 4}});
  Character chi(g, std::map<std::string, Rational>{{"a", Rational(1, 2)}, {"b", Rational(-1, 3)}});
  CHECK(chi.vertex_value(0) == Rational(1, 2));
  CHECK(chi.edge_value(g.edges()[0]) == Rational(1, 6));
  CHECK(chi.primitive_integer_values() == std::vector<std::int64_t>{3, -2});
  CHECK(chi.scaled(Rational(6)).primitive_integer_values() == std::vector<std::int64_t>{3, -2});
  CHECK(chi_of(g, {4, -6}).primitive_integer_values() == std::vector<std::int64_t>{2, -3});
  CHECK_THROWS_AS(Character(g, std::map<std::string, Rational>{{"a", 1}}), InputError);
  CHECK_THROWS_AS(Character(g, std::map<std::string, Rational>{{"a", 1}, {"c", 1}}), InputError);
  CHECK_THROWS_AS(Character(g, std::vector<Rational>{1}), InputError);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7/14") == Rational(-1, 2));
  CHECK(rational_string(Rational(-1, 2)) == "-1/2");
  CHECK(rational_string(Rational(4)) == "4/1");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
}

TEST_CASE("classification of the square with diagonal") {
  auto f = testing::square_with_diagonal();
  auto cls = classify(f.graph, f.chi);
  CHECK(cls.dead_vertices == f.graph.mask_of({"c"}));
  REQUIRE(cls.dead_edges.size() == 1);
  CHECK(f.graph.edge_name(f.graph.edges()[cls.dead_edges[0]]) == "a-b");
  CHECK(cls.relevant_primes == std::set<std::uint64_t>{2});
  CHECK(cls.p_dead(2) == cls.dead_edges);
  CHECK(cls.p_dead(3).empty());
  CHECK_FALSE(cls.zero_character);
}

TEST_CASE("relevant primes come from half labels of edges with m_e = 0") {
  auto f = testing::dihedral_product(4, 6);
  auto cls = classify(f.graph, f.chi);
  CHECK(cls.relevant_primes == std::set<std::uint64_t>{2, 3});
  CHECK(cls.dead_edges.size() == 2);
  EvenGraph g({"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 60}});
  auto cls2 = classify(g, chi_of(g, {1, -1, 1}));
  CHECK(cls2.relevant_primes == std::set<std::uint64_t>{2, 3, 5});
  CHECK(cls2.dead_edges.size() == 1);
}

TEST_CASE("living subgraphs of the square with diagonal") {
  auto f = testing::square_with_diagonal();
  auto l0 = living_subgraph(f.graph, f.chi, LivingMode::dead_vertices_only());
  auto l = living_subgraph(f.graph, f.chi, LivingMode::global());
  auto l2 = living_subgraph(f.graph, f.chi, LivingMode::p_local(2));
  auto l3 = living_subgraph(f.graph, f.chi, LivingMode::p_local(3));
  CHECK(l0.vertex_ids() == std::vector<std::string>{"a", "b", "d"});
  CHECK(l0.edges().size() == 3);
  CHECK(l.edges().size() == 2);
  CHECK_FALSE(l.adjacent(0, 1));
  CHECK(l2 == l);
  CHECK(l3 == l0);
  CHECK(living_subgraph(f.graph, f.chi, LivingMode::p_local(0)) == l0);
}

TEST_CASE("center character") {
  auto f = testing::square_with_diagonal();
  auto ab = center_character(f.graph, f.chi, f.graph.mask_of({"a", "b"}));
  REQUIRE(ab.generators.size() == 1);
  CHECK(ab.generators[0].value == 0);
  CHECK(ab.is_zero());
  auto ad = center_character(f.graph, f.chi, f.graph.mask_of({"a", "d"}));
  CHECK(ad.generators.size() == 2);
  CHECK_FALSE(ad.is_zero());
  auto cd = center_character(f.graph, f.chi, f.graph.mask_of({"c", "d"}));
  REQUIRE(cd.generators.size() == 1);
  CHECK(cd.generators[0].value == 2);
  CHECK_THROWS_AS(center_character(f.graph, f.chi, f.graph.mask_of({"a", "b", "c"})), InputError);
}

TEST_CASE("B families of the fixtures") {
  auto f = testing::square_with_diagonal();
  auto b = enumerate_B(f.graph, f.chi, BMode::global(), 3);
  CHECK(b == std::vector<VertexMask>{0, f.graph.mask_of({"c"}), f.graph.mask_of({"a", "b"})});
  auto d = testing::dihedral_product(4, 6);
  auto vw = d.graph.mask_of({"v", "w"});
  auto xy = d.graph.mask_of({"x", "y"});
  CHECK(enumerate_B(d.graph, d.chi, BMode::global(), 4) == std::vector<VertexMask>{0, vw, xy, vw | xy});
  CHECK(enumerate_B(d.graph, d.chi, BMode::global(), 2) == std::vector<VertexMask>{0, vw, xy});
  CHECK(enumerate_B(d.graph, d.chi, BMode::local(2), 4) == std::vector<VertexMask>{0, vw});
  CHECK(enumerate_B(d.graph, d.chi, BMode::local(5), 4) == std::vector<VertexMask>{0});
  EvenGraph bad({"a", "b", "c"}, {{"a", "b", 4}, {"b", "c", 4}, {"a", "c", 2}});
  CHECK_THROWS_AS(enumerate_B(bad, chi_of(bad, {1, 1, 1}), BMode::global(), 3), InputError);
}

TEST_CASE("B family matches the definition and the center on random graphs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 250; ++i) {
    auto g = testing::random_fc_graph(rng);
    auto chi = testing::random_character(rng, g, -2, 2, false);
    const auto n = g.size();
    CHECK(enumerate_B(g, chi, BMode::global(), n) == testing::brute_force_B(g, chi, false, 0, n));
    for (std::uint64_t p : {0, 2, 3, 5})
      CHECK(enumerate_B(g, chi, BMode::local(p), n) == testing::brute_force_B(g, chi, true, p, n));
    for (VertexMask m : testing::brute_force_cliques(g, n)) {
      bool in_b = false;
      for (VertexMask x : enumerate_B(g, chi, BMode::global(), n)) in_b = in_b || x == m;
      CHECK(in_b == center_character(g, chi, m).is_zero());
    }
  }
}

TEST_CASE("dominating subgraphs") {
  auto f = testing::square_with_diagonal();
  CHECK(is_dominating(f.graph, living_subgraph(f.graph, f.chi, LivingMode::global())));
  EvenGraph g({"a", "b", "c"}, {{"a", "b", 2}});
  CHECK_FALSE(is_dominating(g, induced_subgraph(g, g.mask_of({"a", "b"}))));
  CHECK(is_dominating(g, g));
}
