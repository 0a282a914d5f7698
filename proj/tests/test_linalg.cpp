#include <doctest.h>

#include <random>

#include "superkit/oracles.hpp"
#include "superkit/errors.hpp"
#include "superkit/linalg.hpp"

using namespace superkit;

namespace {
RatMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RatVector> rs;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    RatVector v;
    for (long x : r) v.emplace_back(x);
    cols = v.size();
    rs.push_back(v);
  }
  return RatMatrix::from_rows(rs, cols);
}
}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational(2, -4).to_string() == "-1/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidArgument);
}

TEST_CASE("kernel basics") {
  CHECK(kernel_basis(RatMatrix::identity(3)).empty());
  const auto k = kernel_basis(mat({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] + k[0][1] == Rational(0));
  CHECK(kernel_basis(RatMatrix(2, 3)).size() == 3);
}

TEST_CASE("rank agrees with fraction-free elimination") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t inner = 1 + trial % 6;
    const RatMatrix a = oracle::random_matrix(rng, 6, inner, 3);
    const RatMatrix b = oracle::random_matrix(rng, inner, 7, 3);
    const RatMatrix p = a * b * Rational(1, 3);
    const std::size_t r = rank(p);
    CHECK(r == oracle::bareiss_rank(p));
    CHECK(r <= inner);
    // rank-nullity, and every kernel vector is killed
    const auto k = kernel_basis(p);
    CHECK(k.size() + r == 7);
    for (const auto& v : k) CHECK(is_zero(p.apply(v)));
  }
}

TEST_CASE("inverse agrees with the adjugate formula") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const RatMatrix m = oracle::random_invertible(rng, 4) * Rational(2, 3);
    const auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(*inv == oracle::cramer_inverse(m));
  }
  CHECK_FALSE(inverse(mat({{1, 2}, {2, 4}})).has_value());
}

TEST_CASE("solve_linear") {
  const RatMatrix m = mat({{1, 2}, {2, 4}});
  CHECK_FALSE(solve_linear(m, {Rational(1), Rational(1)}).has_value());
  const auto x = solve_linear(m, {Rational(3), Rational(6)});
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == RatVector{Rational(3), Rational(6)});
}

TEST_CASE("echelon span and subspace helpers") {
  EchelonSpan s(3);
  CHECK(s.insert({1, 1, 0}));
  CHECK_FALSE(s.insert({2, 2, 0}));
  CHECK(s.insert({0, 1, 1}));
  CHECK(s.contains({1, 0, -1}));
  CHECK_FALSE(s.contains({0, 0, 1}));
  const auto meet = intersect_spans({{1, 0, 0}, {0, 1, 0}}, {{0, 1, 0}, {0, 0, 1}}, 3);
  REQUIRE(meet.size() == 1);
  CHECK(same_span(meet, {{0, 5, 0}}, 3));
  const auto c = coordinates_in({{1, 1, 0}, {0, 1, 1}}, {2, 3, 1});
  REQUIRE(c.has_value());
  CHECK(*c == RatVector{Rational(2), Rational(1)});
  CHECK(primitive_integral({Rational(-1, 2), Rational(1, 3)}) == RatVector{Rational(3), Rational(-2)});
}

TEST_CASE("polynomial gcd agrees with the Euclidean oracle") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    auto rand_poly = [&](int deg) {
      std::vector<Rational> c;
      for (int i = 0; i <= deg; ++i) c.emplace_back(d(rng));
      if (c.back().is_zero()) c.back() = 1;
      return RatPoly(c);
    };
    const RatPoly common = rand_poly(trial % 3);
    const RatPoly a = rand_poly(2) * common;
    const RatPoly b = rand_poly(3) * common;
    const RatPoly g = gcd(a, b);
    CHECK(g.coefficients() == oracle::euclid_gcd(a.coefficients(), b.coefficients()));
    CHECK(divide(a, g).remainder.is_zero());
    CHECK(divide(lcm(a, b), a).remainder.is_zero());
  }
}

TEST_CASE("minimal polynomial small cases") {
  CHECK(minimal_polynomial(RatMatrix(2, 2)) == RatPoly::x());
  CHECK(minimal_polynomial(mat({{0, 1}, {0, 0}})) == RatPoly::x() * RatPoly::x());
  CHECK(minimal_polynomial(RatMatrix::diagonal({1, 1, 2})) ==
        RatPoly::linear(1) * RatPoly::linear(2));
  CHECK(minimal_polynomial(mat({{0, -1}, {1, 0}})) == RatPoly({1, 0, 1}));
}

TEST_CASE("minimal polynomial annihilates and is least among candidate divisors") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const RatMatrix m = oracle::random_matrix(rng, 4, 4, 2);
    const RatPoly p = minimal_polynomial(m);
    CHECK(oracle::eval_poly(p.coefficients(), m).is_zero());
    CHECK(p.leading() == Rational(1));
    // no proper monic truncation by degree: powers below deg p are independent
    std::vector<RatVector> powers;
    RatMatrix pw = RatMatrix::identity(4);
    for (int k = 0; k < p.degree(); ++k) {
      powers.push_back(pw.entries());
      pw = pw * m;
    }
    CHECK(span_rank(powers, 16) == powers.size());
  }
}

TEST_CASE("squarefree and rational roots") {
  CHECK(is_squarefree(RatPoly::linear(1) * RatPoly::linear(2)));
  const RatPoly q({1, 0, 1});
  CHECK(is_squarefree(q));
  CHECK_FALSE(is_squarefree(q * q));
  CHECK_FALSE(is_squarefree(RatPoly::x() * RatPoly::x()));
  CHECK(is_squarefree(RatPoly::constant(3)));
  CHECK_THROWS_AS(is_squarefree(RatPoly()), InvalidArgument);
  const RatPoly p = RatPoly({Rational(-1, 2), 1}) * RatPoly::linear(3) * q;
  CHECK(rational_roots(p) == std::vector<Rational>{Rational(1, 2), Rational(3)});
  CHECK_FALSE(splits_squarefree(p));
  CHECK(splits_squarefree(RatPoly({Rational(-1, 2), 1}) * RatPoly::linear(3)));
}

TEST_CASE("eigenspaces") {
  const auto e = rational_eigenspaces(RatMatrix::diagonal({0, 0, 3}));
  REQUIRE(e.size() == 2);
  CHECK(e[0].value == Rational(0));
  CHECK(e[0].basis.size() == 2);
  CHECK(e[1].value == Rational(3));
  CHECK(rational_eigenspaces(mat({{0, -1}, {1, 0}})).empty());
  const auto n = rational_eigenspaces(mat({{0, 1}, {0, 0}}));
  REQUIRE(n.size() == 1);
  CHECK(n[0].basis.size() == 1);
}

TEST_CASE("diagonalizability against constructed Jordan forms") {
  // Ground truth comes from the construction: P J P^{-1} is diagonalizable
  // exactly when J has no nontrivial Jordan block.
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> ev(-2, 2);
  std::bernoulli_distribution coin(0.5);
  int diag_count = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 4;
    RatMatrix j(n, n);
    bool has_block = false;
    for (std::size_t i = 0; i < n; ++i) j(i, i) = ev(rng);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (j(i, i) == j(i + 1, i + 1) && coin(rng)) {
        j(i, i + 1) = 1;
        has_block = true;
      }
    }
    const RatMatrix p = oracle::random_invertible(rng, n);
    const RatMatrix m = p * j * oracle::cramer_inverse(p);
    CHECK(is_rationally_diagonalizable(m) == !has_block);
    CHECK(is_squarefree(minimal_polynomial(m)) == !has_block);
    if (!has_block) ++diag_count;
  }
  CHECK(diag_count > 0);
  CHECK(diag_count < 50);
}
