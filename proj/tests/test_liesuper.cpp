#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "superkit/errors.hpp"
#include "superkit/families.hpp"
#include "superkit/liesuper.hpp"

using namespace superkit;

namespace {
RatVector el(const LieSuperalgebra& g, std::initializer_list<std::pair<const char*, long>> terms) {
  RatVector v = zero_vector(g.dim());
  for (const auto& [label, c] : terms) v[*g.index_of(label)] += Rational(c);
  return v;
}
RatVector e(const LieSuperalgebra& g, const char* label) { return el(g, {{label, 1}}); }

// Direct Jacobi check on basis triples, written independently of validate().
bool jacobi_by_hand(const LieSuperalgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (std::size_t k = 0; k < g.dim(); ++k) {
        const RatVector x = g.basis_vector(i), y = g.basis_vector(j), z = g.basis_vector(k);
        const RatVector lhs = bracket(g, x, bracket(g, y, z));
        RatVector rhs = bracket(g, bracket(g, x, y), z);
        add_scaled(rhs, Rational(koszul_sign(g.parity(i), g.parity(j))), bracket(g, y, bracket(g, x, z)));
        if (lhs != rhs) return false;
      }
  return true;
}
}  // namespace

TEST_CASE("family dimensions") {
  CHECK(build_gl(1, 1).dim() == 4);
  CHECK(build_gl(2, 1).dim() == 9);
  CHECK(build_sl(2, 1).dim() == 8);
  CHECK(build_osp1(1).dim() == 5);
  CHECK(build_osp1(2).dim() == 14);
  CHECK(build_osp1(3).dim() == 27);
  CHECK(build_osp1(2).odd_dim() == 4);
  CHECK(build_family("product:osp1:1,osp1:1").dim() == 10);
  CHECK_THROWS_AS(build_family("nonsense:3"), ParseError);
}

TEST_CASE("families satisfy the axioms") {
  for (const char* spec : {"gl:1:1", "gl:2:1", "sl:2:1", "sl:1:2", "osp1:1", "osp1:2", "toy_odd_nilpotent",
                           "toy_odd_semisimple", "torus:2", "product:osp1:1,gl:1:1"}) {
    CAPTURE(spec);
    const auto g = build_family(spec);
    CHECK(validate(g).ok());
  }
  CHECK(jacobi_by_hand(build_osp1(1)));
  CHECK(jacobi_by_hand(build_gl(1, 1)));
}

TEST_CASE("gl(1|1) brackets and center") {
  const auto g = build_gl(1, 1);
  CHECK(bracket(g, e(g, "E12"), e(g, "E21")) == el(g, {{"E11", 1}, {"E22", 1}}));
  CHECK(bracket(g, e(g, "E11"), e(g, "E12")) == e(g, "E12"));
  const auto z = center(g);
  REQUIRE(z.size() == 1);
  CHECK(same_span(z, {el(g, {{"E11", 1}, {"E22", 1}})}, g.dim()));
  CHECK(is_reductive_even_part(g));
}

TEST_CASE("osp(1|2) conventions") {
  const auto g = build_osp1(1);
  CHECK(odd_square(g, e(g, "a1")) == e(g, "B11"));
  CHECK(odd_square(g, e(g, "b1")) == el(g, {{"C11", -1}}));
  CHECK(bracket(g, e(g, "a1"), e(g, "b1")) == el(g, {{"H1", -1}}));
  CHECK(is_quasireductive(g));
  CHECK(center(g).empty());
  // every odd square in osp(1|2) is a rank one element of sp(2), hence nilpotent
  CHECK_FALSE(in_g1ss(g, el(g, {{"a1", 1}, {"b1", 1}})));
  CHECK(in_g1ss(g, zero_vector(g.dim())));
  CHECK_FALSE(in_g1ss(g, e(g, "a1")));
  CHECK_THROWS_AS(odd_square(g, e(g, "H1")), NotOdd);
  CHECK_THROWS_AS(is_semisimple_element(g, e(g, "a1")), NotEven);
}

TEST_CASE("odd semisimple toy") {
  const auto g = build_toy(ToyKind::OddSemisimple);
  CHECK(in_g1ss(g, e(g, "u")));
  CHECK(odd_square(g, e(g, "u")) == e(g, "h"));
  const auto n = build_toy(ToyKind::OddNilpotent);
  CHECK(in_g1ss(n, e(n, "u")));
}

TEST_CASE("missing faithful representation is reported") {
  auto g = build_osp1(1);
  g.clear_faithful_rep();
  CHECK_THROWS_AS(is_semisimple_element(g, e(g, "H1")), MissingFaithfulRep);
}

TEST_CASE("validate catches corrupted structure constants") {
  auto g = build_osp1(1);
  const auto a = *g.index_of("a1");
  const auto b = *g.index_of("b1");
  const auto h = *g.index_of("H1");
  g.set_structure_constant(a, b, h, Rational(-2));
  const auto report = validate(g);
  CHECK_FALSE(report.ok());
  CHECK_FALSE(report.summary().empty());

  auto p = build_gl(1, 1);
  // odd x odd landing in the odd part is a parity violation
  p.set_structure_constant(*p.index_of("E12"), *p.index_of("E12"), *p.index_of("E21"), Rational(1));
  bool parity_found = false;
  for (const auto& v : validate(p).violations) parity_found |= v.kind == Violation::Kind::Parity;
  CHECK(parity_found);
}

TEST_CASE("reductive and quasireductive flags") {
  CHECK(is_quasireductive(build_gl(1, 1)));
  CHECK(is_quasireductive(build_sl(2, 1)));
  CHECK(is_quasireductive(build_osp1(2)));
  CHECK(is_quasireductive(build_toy(ToyKind::OddSemisimple)));
  CHECK(is_quasireductive(build_toy(ToyKind::OddNilpotent)));
}

TEST_CASE("direct sum decomposition") {
  const auto d = direct_sum_decompose(build_family("product:osp1:1,osp1:2"));
  CHECK(d.center.empty());
  REQUIRE(d.ideals.size() == 2);
  std::vector<std::size_t> dims{d.ideals[0].size(), d.ideals[1].size()};
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{5, 14});

  const auto t = direct_sum_decompose(build_family("product:torus:1,osp1:1"));
  CHECK(t.center.size() == 1);
  CHECK(t.ideals.size() == 1);

  CHECK_THROWS_AS(direct_sum_decompose(build_gl(1, 1)), NotSemisimpleStructure);
  CHECK(direct_sum_decompose(build_sl(2, 1)).ideals.size() == 1);
}

TEST_CASE("ideal detection") {
  const auto g = build_gl(1, 1);
  CHECK(is_ideal(g, {el(g, {{"E11", 1}, {"E22", 1}})}));
  CHECK_FALSE(is_ideal(g, {e(g, "E11")}));
}

TEST_CASE("format_element") {
  const auto g = build_osp1(1);
  CHECK(format_element(g, el(g, {{"a1", 2}, {"H1", -1}})) == "-H1 + 2*a1");
  CHECK(format_element(g, zero_vector(g.dim())) == "0");
}

TEST_CASE("spec-level examples for brackets and squares") {
  const auto gl = build_gl(1, 1);
  const RatVector u = el(gl, {{"E12", 1}, {"E21", 1}});
  CHECK(odd_square(gl, u) == el(gl, {{"E11", 1}, {"E22", 1}}));
  CHECK(in_g1ss(gl, u));
  CHECK(is_semisimple_element(gl, el(gl, {{"E11", 1}, {"E22", 1}})));
  const auto sl = build_sl(2, 1);
  CHECK(is_zero(odd_square(sl, e(sl, "E13"))));
  const auto osp = build_osp1(1);
  CHECK_FALSE(is_semisimple_element(osp, e(osp, "B11")));
  CHECK(is_semisimple_element(osp, zero_vector(osp.dim())));
  CHECK(is_zero(odd_square(osp, zero_vector(osp.dim()))));
}

TEST_CASE("abelian and empty algebras") {
  LieSuperalgebra ab("ab", {"x", "y", "z"}, {Parity::Even, Parity::Odd, Parity::Odd});
  CHECK(validate(ab).ok());
  CHECK(center(ab).size() == 3);
  CHECK(is_zero(bracket(ab, ab.basis_vector(0), ab.basis_vector(0))));
  const auto zero = build_product({});
  CHECK(zero.dim() == 0);
  CHECK(validate(zero).ok());
  const auto t = direct_sum_decompose(build_torus(2));
  CHECK(t.center.size() == 2);
  CHECK(t.ideals.empty());
}

TEST_CASE("corrupted gl(1|1) reports a Jacobi triple") {
  auto g = build_gl(1, 1);
  const auto e12 = *g.index_of("E12"), e21 = *g.index_of("E21"), e11 = *g.index_of("E11");
  // break [E12, E21] = E11 + E22 into 2 E11 + E22, keeping antisymmetry
  RatVector v = zero_vector(4);
  v[e11] = 2;
  v[*g.index_of("E22")] = 1;
  g.set_bracket_pair(e12, e21, v);
  const auto report = validate(g);
  REQUIRE_FALSE(report.ok());
  bool jacobi = false;
  for (const auto& viol : report.violations) jacobi |= viol.kind == Violation::Kind::Jacobi;
  CHECK(jacobi);
}

TEST_CASE("non-reductive and non-quasireductive examples") {
  // [x, y] = y realized by E11, E12
  RatMatrix x(2, 2), y(2, 2);
  x(0, 0) = 1;
  y(0, 1) = 1;
  const auto b = from_matrix_basis("borel", {"x", "y"}, {Parity::Even, Parity::Even}, {x, y},
                                   {Parity::Even, Parity::Even});
  CHECK(validate(b).ok());
  CHECK_FALSE(is_reductive_even_part(b));
  CHECK_FALSE(is_quasireductive(b));

  // even x acting on odd u1, u2 by a Jordan block, all odd brackets zero
  LieSuperalgebra j("jordan", {"x", "u1", "u2"}, {Parity::Even, Parity::Odd, Parity::Odd});
  j.set_bracket_pair(0, 2, {0, 1, 0});
  REQUIRE(validate(j).ok());
  j.set_faithful_rep(adjoint_module(j));
  CHECK(is_reductive_even_part(j));
  CHECK_FALSE(even_acts_semisimply_on_odd(j));
  CHECK_FALSE(is_quasireductive(j));
}

TEST_CASE("odd bracket S^2(g1) -> g0 is an isomorphism for osp(1|2n)") {
  for (int n = 1; n <= 3; ++n) {
    const auto g = build_osp1(n);
    std::vector<RatVector> images;
    const auto& odd = g.odd_indices();
    for (std::size_t p = 0; p < odd.size(); ++p)
      for (std::size_t q = p; q < odd.size(); ++q) images.push_back(g.basis_bracket(odd[p], odd[q]));
    CHECK(images.size() == g.even_dim());
    CHECK(span_rank(images, g.dim()) == g.even_dim());
    CHECK(g.dim() == static_cast<std::size_t>(n * (2 * n + 1) + 2 * n));
    CHECK(center(g).empty());
  }
}

TEST_CASE("matrix families agree with supercommutators in the defining rep") {
  for (const char* spec : {"gl:1:1", "gl:2:1", "sl:2:1", "osp1:2"}) {
    CAPTURE(spec);
    const auto g = build_family(spec);
    const auto& rep = *g.faithful_rep();
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j) {
        const RatMatrix lhs = rep.act(g.basis_bracket(i, j));
        const RatMatrix rhs = commutator(rep.action[i], rep.action[j], koszul_sign(g.parity(i), g.parity(j)));
        CHECK(lhs == rhs);
      }
  }
  const auto sl = build_sl(2, 1);
  const auto& rep = *sl.faithful_rep();
  for (std::size_t i = 0; i < sl.dim(); ++i) {
    Rational str;
    for (std::size_t a = 0; a < rep.dim(); ++a) str += rep.parity[a] == Parity::Even ? rep.action[i](a, a) : -rep.action[i](a, a);
    CHECK(str.is_zero());
  }
}

TEST_CASE("centers of quasireductive built-ins are purely even") {
  for (const char* spec : {"gl:1:1", "gl:2:1", "sl:2:1", "osp1:1", "osp1:2", "toy_odd_semisimple", "torus:1",
                           "product:torus:1,osp1:1"}) {
    CAPTURE(spec);
    const auto g = build_family(spec);
    REQUIRE(is_quasireductive(g));
    for (const auto& z : center(g)) CHECK(is_zero(odd_part(g, z)));
  }
}

TEST_CASE("g1ss membership is invariant under exp(ad x) for ad-nilpotent even x") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-2, 2);
  struct Case {
    const char* spec;
    std::vector<const char*> nilpotents;
  };
  for (const Case& c : {Case{"osp1:1", {"B11", "C11"}}, Case{"gl:1:1", {"E11", "E22"}},
                        Case{"sl:2:1", {"E12", "E21"}}}) {
    const auto g = build_family(c.spec);
    for (int trial = 0; trial < 40; ++trial) {
      RatVector x = zero_vector(g.dim());
      const char* label = c.nilpotents[trial % c.nilpotents.size()];
      x[*g.index_of(label)] = d(rng);
      // the only ad-nilpotent even elements of gl(1|1) are central
      if (std::string(c.spec) == "gl:1:1") x[*g.index_of("E22")] = x[*g.index_of("E11")];
      RatVector u = zero_vector(g.dim());
      for (auto k : g.odd_indices()) u[k] = d(rng);
      const RatMatrix ad = ad_matrix(g, x);
      // exp(ad x) u as a finite sum
      RatVector term = u, moved = u;
      for (int k = 1; k <= static_cast<int>(g.dim()); ++k) {
        term = scaled(ad.apply(term), Rational(1, k));
        if (is_zero(term)) break;
        moved = moved + term;
      }
      REQUIRE(is_odd_element(g, moved));
      CHECK(in_g1ss(g, moved) == in_g1ss(g, u));
    }
  }
}
