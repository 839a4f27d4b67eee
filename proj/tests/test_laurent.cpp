#include <doctest.h>

#include <random>

#include <artinsigma/errors.hpp>
#include <artinsigma/laurent.hpp>
#include <artinsigma/laurent_smith.hpp>

using namespace artinsigma;

using QPoly = LaurentPoly<RationalField>;
using FPoly = LaurentPoly<PrimeField>;

namespace {

const RationalField Q{};

QPoly qp(std::int64_t offset, std::vector<long long> c) {
  std::vector<Rational> r;
  for (auto x : c) r.emplace_back(x);
  return QPoly(Q, offset, r);
}

FPoly fp(const PrimeField& f, std::int64_t offset, std::vector<long long> c) {
  std::vector<std::uint64_t> r;
  for (auto x : c) r.push_back(f.from_int(x));
  return FPoly(f, offset, r);
}

QPoly t_minus_1() { return qp(0, {-1, 1}); }

// Plain polynomial gcd over F_p on coefficient vectors, lowest degree first.
std::vector<std::uint64_t> naive_gcd(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t p) {
  auto trim = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1;
    for (std::uint64_t e = p - 2, base = x; e; e >>= 1, base = base * base % p)
      if (e & 1) r = r * base % p;
    return r;
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      std::uint64_t c = a.back() * inv(b.back()) % p;
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] + p - c * b[i] % p) % p;
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    std::uint64_t c = inv(a.back());
    for (auto& x : a) x = x * c % p;
  }
  return a;
}

template <class F>
LaurentPoly<F> random_poly(std::mt19937_64& rng, const F& f, std::size_t max_len, bool allow_zero = true) {
  std::uniform_int_distribution<int> coef(-2, 2), len(allow_zero ? 0 : 1, static_cast<int>(max_len)),
      off(-2, 2);
  for (;;) {
    std::vector<typename F::Element> c;
    int n = len(rng);
    for (int i = 0; i < n; ++i) c.push_back(f.from_int(coef(rng)));
    LaurentPoly<F> p(f, off(rng), c);
    if (allow_zero || !p.is_zero()) return p;
  }
}

}  // namespace

TEST_CASE("normalization and units") {
  QPoly z = qp(5, {0, 0});
  CHECK(z.is_zero());
  CHECK(z.offset() == 0);
  QPoly p = qp(-1, {0, 2, 0, 3, 0});
  CHECK(p.offset() == 0);
  CHECK(p.top_exponent() == 2);
  CHECK(p.span() == 2);
  CHECK(p.coeff(0) == 2);
  CHECK(QPoly::monomial(Q, Rational(-3), 7).is_unit());
  CHECK_FALSE(t_minus_1().is_unit());
  CHECK(p.canonical() == QPoly(Q, 0, {Rational(2, 3), Rational(0), Rational(1)}));
}

TEST_CASE("arithmetic") {
  QPoly a = qp(-1, {1, 1});  // t^-1 + 1
  QPoly b = t_minus_1();
  CHECK(a * b == qp(-1, {-1, 0, 1}));
  CHECK(a + b == qp(-1, {1, 0, 1}));
  CHECK((a - a).is_zero());
  CHECK(a.shifted(3) == qp(2, {1, 1}));
  CHECK(a.evaluate(Rational(2)) == Rational(3, 2));
  CHECK(a.to_string() == "1 + t^-1");
  CHECK(qp(0, {-1, 0, 2}).to_string() == "2*t^2 + -1");
}

TEST_CASE("q_poly") {
  CHECK(q_poly(1, 5, Q) == QPoly::constant(Q, 1));
  CHECK(q_poly(3, 0, Q) == QPoly::constant(Q, 3));
  CHECK(q_poly(2, -1, Q) == qp(-1, {1, 1}));
  CHECK(q_poly(3, 2, Q) == qp(0, {1, 0, 1, 0, 1}));
  CHECK(q_poly(2, 0, PrimeField(2)).is_zero());
  CHECK_THROWS_AS(q_poly(0, 1, Q), InputError);
}

TEST_CASE("division with remainder") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    auto a = random_poly(rng, Q, 6);
    auto b = random_poly(rng, Q, 4, false);
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK((r.is_zero() || r.span() < b.span()));
  }
  CHECK_THROWS_AS(divmod(t_minus_1(), QPoly(Q)), ConsistencyError);
}

TEST_CASE("gcd agrees with a plain polynomial gcd over F_5") {
  const PrimeField f(5);
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    auto a = random_poly(rng, f, 5);
    auto b = random_poly(rng, f, 5);
    auto g = gcd(a, b);
    auto expect = naive_gcd(a.coeffs(), b.coeffs(), 5);
    if (expect.empty()) {
      CHECK(g.is_zero());
    } else {
      CHECK(g.offset() == 0);
      CHECK(g.coeffs() == expect);
      CHECK(g.divides(a));
      CHECK(g.divides(b));
    }
  }
}

TEST_CASE("Smith form of small matrices") {
  LaurentMatrix<RationalField> m(1, 1, t_minus_1());
  auto s = smith_normal_form<RationalField>(m);
  CHECK(s.rank == 1);
  CHECK(s.factors == std::vector<QPoly>{t_minus_1()});

  LaurentMatrix<RationalField> zero(2, 3, QPoly(Q));
  CHECK(smith_normal_form<RationalField>(zero).rank == 0);
  CHECK(smith_normal_form<RationalField>(zero).factors.empty());

  // [[t-1, t^2-1], [0, t+1]]: d1 = gcd of entries = 1, d1 d2 = det = t^2 - 1.
  LaurentMatrix<RationalField> a(2, 2, QPoly(Q));
  a(0, 0) = t_minus_1();
  a(0, 1) = qp(0, {-1, 0, 1});
  a(1, 1) = qp(0, {1, 1});
  auto sa = smith_normal_form<RationalField>(a);
  REQUIRE(sa.rank == 2);
  CHECK(sa.factors[0] == QPoly::constant(Q, 1));
  CHECK(sa.factors[1] == qp(0, {-1, 0, 1}));
}

TEST_CASE("2x2 Smith forms satisfy the gcd and determinant identities") {
  const PrimeField f(3);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    LaurentMatrix<PrimeField> m(2, 2, FPoly(f));
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) m(r, c) = random_poly(rng, f, 3);
    auto s = smith_normal_form<PrimeField>(m);
    const FPoly det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const FPoly g = gcd(gcd(m(0, 0), m(0, 1)), gcd(m(1, 0), m(1, 1)));
    if (g.is_zero()) {
      CHECK(s.rank == 0);
      continue;
    }
    CHECK(s.factors[0] == g);
    if (det.is_zero()) {
      CHECK(s.rank == 1);
    } else {
      REQUIRE(s.rank == 2);
      CHECK((s.factors[0] * s.factors[1]) == det.canonical());
      CHECK(s.factors[0].divides(s.factors[1]));
    }
  }
}

TEST_CASE("Smith form is invariant under row and column operations") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 80; ++i) {
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    const std::size_t rows = dim(rng), cols = dim(rng);
    LaurentMatrix<RationalField> m(rows, cols, QPoly(Q));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_poly(rng, Q, 3);
    auto base = smith_normal_form<RationalField>(m);
    for (std::size_t k = 1; k < base.factors.size(); ++k) CHECK(base.factors[k - 1].divides(base.factors[k]));

    auto shuffled = m;
    std::vector<std::size_t> rp(rows), cp(cols);
    for (std::size_t k = 0; k < rows; ++k) rp[k] = k;
    for (std::size_t k = 0; k < cols; ++k) cp[k] = k;
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) shuffled(r, c) = m(rp[r], cp[c]);
    if (rows > 1) {
      auto mult = random_poly(rng, Q, 2);
      for (std::size_t c = 0; c < cols; ++c) shuffled(0, c) = shuffled(0, c) + mult * shuffled(1, c);
    }
    for (std::size_t r = 0; r < rows; ++r) shuffled(r, 0) = shuffled(r, 0).shifted(2).scaled(Rational(-3));
    CHECK(smith_normal_form<RationalField>(shuffled).factors == base.factors);
  }
}
