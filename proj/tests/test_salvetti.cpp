#include <doctest.h>

#include <artinsigma/errors.hpp>
#include <artinsigma/link_conditions.hpp>
#include <artinsigma/salvetti.hpp>
#include <artinsigma/smith.hpp>

#include "test_support.hpp"

using namespace artinsigma;
using testing::chi_of;

namespace {

const RationalField Q{};

template <class F>
LaurentPoly<F> t_minus_1(const F& f) {
  return LaurentPoly<F>::t_power(f, 1) - LaurentPoly<F>::constant(f, 1);
}

template <class F>
void check_squares_to_zero(const TwistedComplex<F>& cx) {
  for (std::size_t n = 1; n + 1 < cx.differentials.size(); ++n)
    CHECK(is_zero_matrix<F>(laurent_product(cx.differentials[n], cx.differentials[n + 1], cx.field)));
}

// Rank of D evaluated at t = x over the same field.
template <class F>
std::size_t evaluated_rank(const LaurentMatrix<F>& d, const F& f, const typename F::Element& x) {
  Matrix<typename F::Element> m(d.rows(), d.cols(), f.zero());
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c) m(r, c) = d(r, c).evaluate(x);
  return field_rank(f, m);
}

}  // namespace

TEST_CASE("coefficients b") {
  EvenGraph single({"v"}, {});
  CHECK(coefficient_b(single, chi_of(single, {1}), bit(0), 0, Q) == t_minus_1(Q));
  for (int half : {2, 3, 4, 6}) {
    auto d = testing::dihedral(2 * half);
    auto b = coefficient_b(d.graph, d.chi, d.graph.all_vertices(), 0, Q);
    CHECK(b == t_minus_1(Q).scaled(Rational(half)));
    const PrimeField f2(2);
    CHECK(coefficient_b(d.graph, d.chi, d.graph.all_vertices(), 0, f2).is_zero() == (half % 2 == 0));
  }
  auto d = testing::dihedral(4);
  CHECK_THROWS_AS(coefficient_b(d.graph, d.chi, bit(0), 1, Q), InputError);
}

TEST_CASE("coefficient b vanishes exactly on dead vertices and p-dead edges") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 120; ++i) {
    auto g = testing::random_fc_graph(rng);
    auto chi = testing::random_character(rng, g, -2, 2, false);
    auto cls = classify(g, chi);
    for (std::uint64_t p : {2, 3}) {
      const PrimeField f(p);
      for (VertexMask x : enumerate_cliques(g, g.size())) {
        for (VertexIndex v : mask_indices(x)) {
          bool dead = chi.vertex_value(v) == 0;
          for (std::size_t e : cls.p_dead(p)) {
            const Edge& edge = g.edges()[e];
            if ((edge.mask() & ~x) == 0 && (edge.u == v || edge.v == v)) dead = true;
          }
          CHECK(coefficient_b(g, chi, x, v, f).is_zero() == dead);
        }
      }
    }
  }
}

TEST_CASE("small twisted complexes") {
  EvenGraph single({"v"}, {});
  auto cx = build_salvetti_complex(single, chi_of(single, {1}), Q, 1);
  REQUIRE(cx.differentials.size() == 2);
  CHECK(cx.differentials[0].rows() == 0);
  CHECK(cx.differentials[1].rows() == 1);
  CHECK(cx.differentials[1](0, 0) == t_minus_1(Q));

  auto d = testing::dihedral(4);
  auto cx2 = build_salvetti_complex(d.graph, d.chi, PrimeField(2), 2);
  CHECK(is_zero_matrix<PrimeField>(cx2.differentials[2]));
  CHECK(cx2.basis[2] == std::vector<VertexMask>{bit(0) | bit(1)});

  auto p = testing::dihedral_product(4, 4);
  auto cx3 = build_salvetti_complex(p.graph, p.chi, PrimeField(2), 4);
  check_squares_to_zero(cx3);
  CHECK(cx3.basis[4].size() == 1);

  EvenGraph bad({"a", "b", "c"}, {{"a", "b", 4}, {"b", "c", 4}, {"a", "c", 2}});
  CHECK_THROWS_AS(build_salvetti_complex(bad, chi_of(bad, {1, 1, 1}), Q, 2), InputError);
}

TEST_CASE("dihedral H_1 case split") {
  for (int half : {2, 3, 4, 6}) {
    auto d = testing::dihedral(2 * half);
    for (std::uint64_t p : {0, 2, 3, 5}) {
      const bool free = p != 0 && half % static_cast<int>(p) == 0;
      with_field(p, [&](const auto& f) {
        auto m = homology_module(build_salvetti_complex(d.graph, d.chi, f, 2), 1);
        CHECK(m.free_rank == (free ? 1u : 0u));
        if (free) {
          CHECK(m.torsion.empty());
        } else {
          REQUIRE(m.torsion.size() == 1);
          CHECK(m.torsion[0] == t_minus_1(f));
        }
      });
      CHECK(kernel_free_rank(d.graph, d.chi, p, 1) == (free ? 1u : 0u));
    }
  }
}

TEST_CASE("H_0 of the cover is F[t^±1]/(t-1)") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 40; ++i) {
    auto g = testing::random_fc_graph(rng);
    auto chi = testing::random_character(rng, g);
    auto m = homology_module(build_salvetti_complex(g, chi, Q, 1), 0);
    CHECK(m.free_rank == 0);
    REQUIRE(m.torsion.size() == 1);
    CHECK(m.torsion[0] == t_minus_1(Q));
  }
  auto d = testing::dihedral(4);
  CHECK_THROWS_AS(homology_module(build_salvetti_complex(d.graph, d.chi, Q, 1), 1), InputError);
}

TEST_CASE("cross-check on the fixtures") {
  auto d = testing::dihedral(4);
  auto r = cross_check(d.graph, d.chi, 2, 1);
  CHECK(r.oracle_free_rank == 1);
  CHECK(r.agrees());
  auto p46 = testing::dihedral_product(4, 6);
  CHECK(cross_check(p46.graph, p46.chi, 2, 2).formula_free_rank == 0);
  auto p44 = testing::dihedral_product(4, 4);
  auto r44 = cross_check(p44.graph, p44.chi, 2, 2);
  CHECK(r44.oracle_free_rank == 1);
  CHECK(r44.formula_free_rank == 1);
  CHECK_THROWS_AS(cross_check(d.graph, d.chi, 4, 1), InputError);
}

TEST_CASE("twisted differentials square to zero on random graphs") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 60; ++i) {
    auto g = testing::random_fc_graph(rng);
    auto chi = testing::random_character(rng, g, -3, 3);
    check_squares_to_zero(build_salvetti_complex(g, chi, Q, static_cast<int>(g.size())));
    check_squares_to_zero(build_salvetti_complex(g, chi, PrimeField(3), static_cast<int>(g.size())));
  }
}

TEST_CASE("rank over the fraction field matches generic evaluation") {
  const PrimeField f(1000003);
  std::mt19937_64 rng(34);
  std::uniform_int_distribution<std::uint64_t> point(2, 1000000);
  for (int i = 0; i < 40; ++i) {
    auto g = testing::random_fc_graph(rng);
    auto chi = testing::random_character(rng, g);
    auto cx = build_salvetti_complex(g, chi, f, static_cast<int>(g.size()));
    for (std::size_t n = 1; n < cx.differentials.size(); ++n) {
      const auto snf = smith_normal_form<PrimeField>(cx.differentials[n]).rank;
      std::size_t best = 0;
      for (int k = 0; k < 3; ++k) {
        const auto r = evaluated_rank(cx.differentials[n], f, point(rng));
        CHECK(r <= snf);
        best = std::max(best, r);
      }
      CHECK(best == snf);
    }
  }
}

TEST_CASE("SNF factors do not depend on the clique order") {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 40; ++i) {
    auto g = testing::random_fc_graph(rng);
    auto chi = testing::random_character(rng, g);
    auto ids = g.vertex_ids();
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<EdgeSpec> edges;
    for (const auto& e : g.edges()) edges.push_back({g.id(e.u), g.id(e.v), e.label});
    EvenGraph h(ids, edges);
    auto chi_h = chi.restricted(g, h);
    const PrimeField f(5);
    auto a = build_salvetti_complex(g, chi, f, static_cast<int>(g.size()));
    auto b = build_salvetti_complex(h, chi_h, f, static_cast<int>(h.size()));
    for (std::size_t n = 1; n < a.differentials.size(); ++n)
      CHECK(smith_normal_form<PrimeField>(a.differentials[n]).factors ==
            smith_normal_form<PrimeField>(b.differentials[n]).factors);
  }
}
