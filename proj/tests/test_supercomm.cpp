#include <doctest.h>

#include <bit>
#include <random>

#include "superkit/errors.hpp"
#include "superkit/families.hpp"
#include "superkit/roots.hpp"
#include "superkit/supercomm.hpp"

using namespace superkit;

namespace {

// Exterior algebra on k generators, basis by bit mask, xi_A xi_B = merge sign.
SupercommAlgebra exterior(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels;
  std::vector<Parity> parity;
  for (std::size_t m = 0; m < n; ++m) {
    labels.push_back("m" + std::to_string(m));
    parity.push_back(std::popcount(m) % 2 ? Parity::Odd : Parity::Even);
  }
  SupercommAlgebra a("ext" + std::to_string(k), labels, parity);
  a.set_unit(unit_vector(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      RatVector v(n);
      if ((x & y) == 0) {
        // count pairs (i in x, j in y) with j < i
        int inv = 0;
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < i; ++j) inv += (x >> i & 1) && (y >> j & 1);
        v[x | y] = inv % 2 ? -1 : 1;
      }
      a.set_product(x, y, v);
    }
  }
  return a;
}

// Odd derivation determined by the images of the generators (even elements).
OddDerivation extend(const SupercommAlgebra& a, const std::vector<RatVector>& gen_images) {
  const std::size_t n = a.dim();
  std::vector<RatVector> cols(n, RatVector(n));
  for (std::size_t m = 1; m < n; ++m) {
    // xi_m = xi_low * rest, u(xi_m) = u(xi_low) rest - xi_low u(rest)
    const std::size_t low = std::countr_zero(m);
    const std::size_t rest = m & (m - 1);
    const RatVector xl = a.basis_vector(std::size_t{1} << low);
    cols[m] = a.multiply(gen_images[low], a.basis_vector(rest));
    add_scaled(cols[m], -1, a.multiply(xl, cols[rest]));
  }
  return OddDerivation{RatMatrix::from_columns(cols, n)};
}

RatVector even_random(const SupercommAlgebra& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-1, 1);
  RatVector v(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.parity(i) == Parity::Even) v[i] = c(rng);
  return v;
}

}  // namespace

TEST_CASE("catalog algebras and derivations validate") {
  for (const auto& p : supercomm_catalog()) {
    CAPTURE(p.name);
    CHECK(validate_algebra(p.algebra).ok());
    CHECK(validate_derivation(p.algebra, p.u).ok());
  }
  CHECK(validate_algebra(exterior(3)).ok());
}

TEST_CASE("corruptions are reported") {
  auto p = unit_circle_pair();
  auto bad = p.u;
  bad.matrix(0, 3) = 2;  // u(x xi) = 2
  const auto r = validate_derivation(p.algebra, bad);
  REQUIRE(!r.ok());
  CHECK(r.violations.front().kind == SupercommViolation::Kind::Leibniz);

  auto alg = p.algebra;
  alg.set_product(2, 2, RatVector{1, 0, 0, 0});  // xi^2 = 1
  const auto ra = validate_algebra(alg);
  REQUIRE(!ra.ok());
  bool assoc_or_comm = false;
  for (const auto& v : ra.violations)
    assoc_or_comm |= v.kind == SupercommViolation::Kind::Associativity ||
                      v.kind == SupercommViolation::Kind::Supercommutativity;
  CHECK(assoc_or_comm);

  auto odd_bad = p.u;
  odd_bad.matrix(1, 0) = 1;  // u(1) = x, even to even
  CHECK(validate_derivation(p.algebra, odd_bad).violations.front().kind == SupercommViolation::Kind::Parity);
}

TEST_CASE("nonvanishing") {
  CHECK(is_nonvanishing(exterior_d().algebra, exterior_d().u));
  const auto e = exterior_d();
  CHECK_FALSE(is_nonvanishing(e.algebra, OddDerivation{RatMatrix(2, 2)}));
  CHECK_FALSE(is_nonvanishing(vanishing_pair().algebra, vanishing_pair().u));
}

TEST_CASE("splitting witnesses on the catalog") {
  const auto e = exterior_d();
  const auto re = splitting_witness(e.algebra, e.u);
  CHECK(re.f == RatVector{0, 1});

  const auto c = unit_circle_pair();
  const auto rc = splitting_witness(c.algebra, c.u);
  CHECK(rc.f == RatVector{0, 0, 0, 1});  // x xi

  for (const auto& p : supercomm_catalog()) {
    CAPTURE(p.name);
    if (!p.expect_splitting) {
      CHECK_THROWS_AS(splitting_witness(p.algebra, p.u), Vanishing);
      CHECK_FALSE(verify_no_splitting(p.algebra, p.u));
      continue;
    }
    const auto r = splitting_witness(p.algebra, p.u);
    CHECK(p.u.apply(r.f) == p.algebra.unit());
    CHECK(p.algebra.is_homogeneous(r.f, Parity::Odd));
    CHECK(verify_no_splitting(p.algebra, p.u));
  }
  CHECK_FALSE(verify_no_splitting(e.algebra, OddDerivation{RatMatrix(2, 2)}));
}

TEST_CASE("nilpotent correction term is inverted") {
  // u(xi1) = 1 + xi2 xi3, u(xi2) = u(xi3) = 0
  const auto a = exterior(3);
  std::vector<RatVector> imgs(3, RatVector(8));
  imgs[0][0] = 1;
  imgs[0][6] = 1;
  const auto u = extend(a, imgs);
  REQUIRE(validate_derivation(a, u).ok());
  const auto r = splitting_witness(a, u);
  CHECK(u.apply(r.f) == a.unit());
  CHECK(r.eta_nilpotency >= 1);
}

TEST_CASE("nonzero spectrum of u^2 and the non-semisimple error") {
  const auto a = exterior(2);
  // u(xi1) = 1, u(xi2) = xi1 xi2: h xi2 = xi2
  std::vector<RatVector> imgs(2, RatVector(4));
  imgs[0][0] = 1;
  imgs[1][3] = 1;
  const auto u = extend(a, imgs);
  REQUIRE(validate_derivation(a, u).ok());
  const auto r = splitting_witness(a, u);
  CHECK(u.apply(r.f) == a.unit());
  CHECK(r.h_spectrum == std::vector<Rational>{0, 1});

  // u(xi1) = 1 + xi1 xi2, u(xi2) = 0: h xi1 = xi2, nilpotent
  std::vector<RatVector> bad(2, RatVector(4));
  bad[0][0] = 1;
  bad[0][3] = 1;
  const auto ub = extend(a, bad);
  REQUIRE(validate_derivation(a, ub).ok());
  CHECK_THROWS_AS(splitting_witness(a, ub), NonSemisimpleSquare);
}

TEST_CASE("random odd derivations on an exterior algebra") {
  const auto a = exterior(3);
  std::mt19937_64 rng(99);
  int successes = 0, vanishing = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<RatVector> imgs;
    for (int g = 0; g < 3; ++g) imgs.push_back(even_random(a, rng));
    const auto u = extend(a, imgs);
    REQUIRE(validate_derivation(a, u).ok());
    const RatMatrix h = u.matrix * u.matrix;
    CHECK(h * u.matrix == u.matrix * h);
    try {
      const auto r = splitting_witness(a, u);
      CHECK(u.apply(r.f) == a.unit());
      CHECK(a.is_homogeneous(r.f, Parity::Odd));
      // eta^N = 0 with N = dim
      RatVector pw = r.eta;
      for (std::size_t k = 1; k < a.dim(); ++k) pw = a.multiply(pw, r.eta);
      CHECK(is_zero(pw));
      CHECK(verify_no_splitting(a, u));
      ++successes;
    } catch (const Vanishing&) {
      CHECK_FALSE(is_nonvanishing(a, u));
      ++vanishing;
    } catch (const NonSemisimpleSquare&) {
    }
  }
  CHECK(successes > 20);
  CHECK(vanishing > 5);
}

TEST_CASE("dual coinvariant algebras of witnesses contain 1 in the image of u") {
  for (const auto& spec : {"gl:1:1", "sl:2:1", "toy_odd_semisimple", "gl:2:1"}) {
    CAPTURE(spec);
    const auto g = build_family(spec);
    const auto scan = g1ss_structural_scan(g);
    REQUIRE(scan.witness);
    const auto p = coinvariant_dual_pair(g, *scan.witness);
    CHECK(validate_algebra(p.algebra).ok());
    CHECK(validate_derivation(p.algebra, p.u).ok());
    CHECK(verify_no_splitting(p.algebra, p.u));
    const auto r = splitting_witness(p.algebra, p.u);
    CHECK(p.u.apply(r.f) == p.algebra.unit());
  }
}
