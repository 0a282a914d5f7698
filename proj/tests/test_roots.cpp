#include <doctest.h>

#include "superkit/errors.hpp"
#include "superkit/families.hpp"
#include "superkit/roots.hpp"

using namespace superkit;

namespace {

std::size_t total_dim(const RootDatum& rd) {
  std::size_t d = 0;
  for (const auto& r : rd.roots) d += r.basis.size();
  return d;
}

RatVector w1(int a) { return RatVector{Rational(a)}; }

// Killing form of g0 on the Cartan, and the induced pairing on weights.
Rational weight_norm(const LieSuperalgebra& g, const std::vector<RatVector>& cartan, const RatVector& w) {
  const std::size_t r = cartan.size();
  RatMatrix k(r, r);
  const auto& ev = g.even_indices();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const RatMatrix prod = ad_matrix(g, cartan[i]) * ad_matrix(g, cartan[j]);
      Rational tr;
      for (auto e : ev) tr += prod(e, e);
      k(i, j) = tr;
    }
  }
  const auto x = solve_linear(k, w);
  REQUIRE(x.has_value());
  return dot(w, *x);
}

}  // namespace

TEST_CASE("osp(1|2) roots are 0, +-1 odd and +-2 even") {
  const auto g = build_osp1(1);
  const auto rd = root_decomposition(g, g.cartan());
  CHECK(total_dim(rd) == g.dim());
  for (int a : {-2, 0, 2}) {
    const auto* r = rd.find(w1(a), Parity::Even);
    REQUIRE(r != nullptr);
    CHECK(r->basis.size() == 1);
  }
  for (int a : {-1, 1}) {
    const auto* r = rd.find(w1(a), Parity::Odd);
    REQUIRE(r != nullptr);
    CHECK(r->basis.size() == 1);
  }
  CHECK(rd.roots.size() == 5);
}

TEST_CASE("gl(1|1) odd roots are opposite and the zero weight space is the Cartan") {
  const auto g = build_gl(1, 1);
  const auto rd = root_decomposition(g, g.cartan());
  CHECK(total_dim(rd) == 4);
  const auto* zero = rd.find(RatVector(2), Parity::Even);
  REQUIRE(zero != nullptr);
  CHECK(same_span(zero->basis, g.cartan(), g.dim()));
  std::vector<RatVector> odd_weights;
  for (const auto& r : rd.roots)
    if (r.parity == Parity::Odd) {
      CHECK(r.basis.size() == 1);
      odd_weights.push_back(r.weight);
    }
  REQUIRE(odd_weights.size() == 2);
  CHECK(is_zero(odd_weights[0] + odd_weights[1]));
  CHECK(!is_zero(odd_weights[0]));
}

TEST_CASE("abelian even algebra has one zero root space") {
  const auto g = build_torus(3);
  std::vector<RatVector> all;
  for (std::size_t i = 0; i < 3; ++i) all.push_back(g.basis_vector(i));
  const auto rd = root_decomposition(g, all);
  REQUIRE(rd.roots.size() == 1);
  CHECK(rd.roots[0].basis.size() == 3);
  CHECK(rd.roots[0].is_zero_weight());
}

TEST_CASE("root_decomposition rejects bad Cartans") {
  const auto g = build_osp1(1);
  const auto e = g.basis_vector(*g.index_of("B11"));
  CHECK_THROWS_AS(root_decomposition(g, {e}), NonSemisimpleCartanAction);
  CHECK_THROWS_AS(root_decomposition(g, {g.basis_vector(*g.index_of("a1"))}), NotEven);
  const auto h = g.basis_vector(*g.index_of("H1"));
  CHECK_THROWS_AS(root_decomposition(g, {h, e}), InvalidArgument);
}

TEST_CASE("find_cartan dimensions") {
  const auto gl = build_gl(1, 1);
  const auto t = find_cartan(gl, 7);
  CHECK(t.size() == 2);
  CHECK(same_span(t, gl.cartan(), gl.dim()));
  CHECK(find_cartan(build_osp1(1), 7).size() == 1);
  CHECK(find_cartan(build_osp1(2), 11).size() == 2);
  CHECK(find_cartan(build_osp1(3), 13).size() == 3);
  CHECK(find_cartan(build_sl(2, 1), 5).size() == 2);
  const LieSuperalgebra zero("zero", {}, {});
  CHECK(find_cartan(zero).empty());
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = build_osp1(2);
    const auto c = find_cartan(g, seed);
    const auto rd = root_decomposition(g, c);
    CHECK(total_dim(rd) == g.dim());
  }
}

TEST_CASE("find_cartan fails on a nilpotent even part") {
  LieSuperalgebra g("heis", {"x", "y", "z"}, {Parity::Even, Parity::Even, Parity::Even});
  g.set_bracket_pair(0, 1, unit_vector(3, 2));
  CHECK_THROWS_AS(find_cartan(g, 1, 20), CartanSearchFailed);
}

TEST_CASE("classify_simple recognizes osp(1|2n) with a bracket-preserving map") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const auto g = build_osp1(n);
    const auto out = classify_simple(g, g.cartan());
    REQUIRE(out.kind == ClassificationOutcome::Kind::Osp);
    CHECK(out.n == n);
    CHECK(is_isomorphism(build_osp1(n), g, out.basis_map));
    // with a searched Cartan too
    const auto out2 = classify_simple(g, find_cartan(g, 100 + n));
    CHECK(out2.kind == ClassificationOutcome::Kind::Osp);
  }
}

TEST_CASE("classify_simple on a rescaled, rotated osp(1|4)") {
  // Change of basis: scale odd vectors by 3 and mix a1, a2.
  const auto src = build_osp1(2);
  const std::size_t d = src.dim();
  RatMatrix p = RatMatrix::identity(d);
  const auto a1 = *src.index_of("a1"), a2 = *src.index_of("a2");
  for (auto i : src.odd_indices()) p(i, i) = 3;
  p(a2, a1) = 1;
  std::vector<RatMatrix> mats;
  for (std::size_t i = 0; i < d; ++i) mats.push_back(src.faithful_rep()->act(p.column(i)));
  const auto g = from_matrix_basis("osp_twisted", src.labels(), src.parities(), mats, src.faithful_rep()->parity);
  REQUIRE(validate(g).ok());
  const auto out = classify_simple(g, find_cartan(g, 3));
  REQUIRE(out.kind == ClassificationOutcome::Kind::Osp);
  CHECK(is_isomorphism(src, g, out.basis_map));
}

TEST_CASE("classify_simple finds a witness for sl(2|1)") {
  const auto g = build_sl(2, 1);
  const auto out = classify_simple(g, g.cartan());
  REQUIRE(out.kind == ClassificationOutcome::Kind::Witness);
  CHECK(!is_zero(out.witness));
  CHECK(is_odd_element(g, out.witness));
  CHECK(in_g1ss(g, out.witness));
  CHECK(is_zero(odd_square(g, out.witness)));
}

TEST_CASE("classify_simple is inconclusive without odd part") {
  const auto g = build_torus(1);
  CHECK(classify_simple(g, g.cartan()).kind == ClassificationOutcome::Kind::Inconclusive);
}

TEST_CASE("structural scan on products, gl(1|1) and the toy") {
  const auto prod = build_product({build_torus(1), build_osp1(1), build_osp1(2)});
  const auto s = g1ss_structural_scan(prod);
  CHECK(!s.witness);
  CHECK(s.certified_zero);
  CHECK(!s.used_fallback);
  std::size_t osp_factors = 0;
  for (const auto& f : s.factors) osp_factors += f.outcome.kind == ClassificationOutcome::Kind::Osp;
  CHECK(osp_factors == 2);

  for (const auto& g : {build_gl(1, 1), build_toy(ToyKind::OddSemisimple), build_sl(2, 1), build_gl(2, 1)}) {
    CAPTURE(g.name());
    const auto r = g1ss_structural_scan(g);
    REQUIRE(r.witness.has_value());
    CHECK(!is_zero(*r.witness));
    CHECK(in_g1ss(g, *r.witness));
    CHECK(!r.certified_zero);
  }
  CHECK(g1ss_structural_scan(build_gl(1, 1)).used_fallback);
}

TEST_CASE("scan and sampling agree on the built-ins") {
  const std::vector<std::string> specs = {"osp1:1", "osp1:2", "osp1:3", "gl:1:1", "gl:2:1", "sl:2:1",
                                          "toy_odd_semisimple", "torus:2", "product:torus:1,osp1:1,osp1:2"};
  for (const auto& spec : specs) {
    CAPTURE(spec);
    const auto g = build_family(spec);
    const auto scan = g1ss_structural_scan(g);
    const auto sample = sample_g1ss(g, 10000, 42);
    CHECK(scan.witness.has_value() == sample.has_value());
    CHECK(scan.certified_zero == !sample.has_value());
    if (sample) CHECK(in_g1ss(g, *sample));
  }
}

TEST_CASE("odd roots of osp(1|2n) are one-dimensional with 2 alpha a long root") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const auto g = build_osp1(n);
    const auto rd = root_decomposition(g, g.cartan());
    Rational longest;
    for (const auto& r : rd.roots)
      if (r.parity == Parity::Even && !r.is_zero_weight()) longest = std::max(longest, weight_norm(g, rd.cartan, r.weight));
    for (const auto& r : rd.roots) {
      if (r.parity != Parity::Odd) continue;
      CHECK(r.basis.size() == 1);
      const RatVector twice = scaled(r.weight, 2);
      const auto* even = rd.find(twice, Parity::Even);
      REQUIRE(even != nullptr);
      CHECK(weight_norm(g, rd.cartan, twice) == longest);
    }
  }
}
