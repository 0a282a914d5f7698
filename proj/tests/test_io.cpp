#include <doctest.h>

#include <random>

#include "superkit/catalog.hpp"
#include "superkit/errors.hpp"
#include "superkit/families.hpp"
#include "superkit/io.hpp"
#include "superkit/reps.hpp"
#include "superkit/supercomm.hpp"

using namespace superkit;

namespace {

std::string parse_error_of(const std::string& text) {
  try {
    parse_algebra_string(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("every built-in family round-trips exactly") {
  const std::vector<std::string> specs = {"gl:1:1", "gl:2:1", "gl:1:2", "sl:2:1", "osp1:1", "osp1:2", "osp1:3",
                                          "toy_odd_semisimple", "toy_odd_nilpotent", "torus:2",
                                          "product:torus:1,osp1:1,osp1:2"};
  for (const auto& spec : specs) {
    CAPTURE(spec);
    const auto g = build_family(spec);
    const std::string text = write_algebra(g);
    const auto parsed = parse_algebra_string(text);
    CHECK(parsed.warnings.empty());
    CHECK(parsed.algebra == g);
    CHECK(write_algebra(parsed.algebra) == text);
  }
}

TEST_CASE("non-unit rationals and cartan vectors survive") {
  auto g = build_sl(2, 1);
  g.set_cartan({scaled(g.cartan()[0], Rational(3, 7)) + g.cartan()[1]});
  const auto parsed = parse_algebra_string(write_algebra(g));
  CHECK(parsed.algebra == g);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_of("").find("line 0") == 0);
  CHECK(parse_error_of("algebra x\nbasis a even\nbasis b sideways\nend\n").find("line 3: bad parity") == 0);
  CHECK(parse_error_of("algebra x\nbasis a even\n\n# comment\nbracket a a c 1\nend\n").find("line 5: unknown label") == 0);
  CHECK(parse_error_of("algebra x\nbasis a even\nbracket a a a 1/0\nend\n").find("line 3: bad rational") == 0);
  CHECK(parse_error_of("algebra x\nbasis a even\nfrobnicate\nend\n").find("line 3: unknown keyword") == 0);
  CHECK(parse_error_of("algebra x\nbasis a even\n").find("missing 'end'") != std::string::npos);
  CHECK(parse_error_of("algebra x\nbasis a odd\nrep_parity even odd\nrep a\n 0 1\nend\n").find("line 6: matrix row") == 0);
  CHECK(parse_error_of("module m\nend\n").find("line 1: expected 'algebra") == 0);
}

TEST_CASE("strict mode rejects invalid algebras, lax mode warns") {
  // [a, b] = a with a odd, b even is fine; make it non-antisymmetric instead.
  const std::string text = "algebra bad\nbasis x even\nbasis y even\nbracket x y x 1\nend\n";
  CHECK_THROWS_AS(parse_algebra_string(text), ParseError);
  const auto lax = parse_algebra_string(text, ParseOptions{false});
  CHECK(!lax.warnings.empty());
  CHECK(lax.algebra.dim() == 2);
}

TEST_CASE("modules round-trip and are validated") {
  const auto g = build_gl(1, 1);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto m = random_gl11_module(g, rng);
    const auto text = write_module(g, m, "m" + std::to_string(t), "gl:1:1");
    const auto parsed = parse_module_string(text, g);
    CHECK(parsed.module == m);
    CHECK(parsed.algebra_ref == "gl:1:1");
  }
  // E11 acting by 2 breaks [E11, E12] = E12
  auto bad = *g.faithful_rep();
  bad.action[0](0, 0) = 2;
  const auto text = write_module(g, bad, "bad", "gl:1:1");
  CHECK_THROWS_AS(parse_module_string(text, g), ParseError);
  CHECK(!parse_module_string(text, g, ParseOptions{false}).warnings.empty());
  CHECK_THROWS_AS(parse_module_string("module m\nparity even\naction Z\n 1\nend\n", g), ParseError);
}

TEST_CASE("supercommutative pairs round-trip") {
  for (const auto& p : supercomm_catalog()) {
    CAPTURE(p.name);
    const auto text = write_supercomm(p.algebra, p.u);
    const auto parsed = parse_supercomm_string(text);
    CHECK(parsed.algebra == p.algebra);
    CHECK(parsed.u.matrix == p.u.matrix);
  }
  CHECK_THROWS_AS(parse_supercomm_string("supercomm s\nbasis 1 even\nend\n"), ParseError);
}

TEST_CASE("element parsing") {
  const auto g = build_gl(1, 1);
  const auto u = parse_element(g, "E12=1,E21=1");
  CHECK(u == RatVector{0, 1, 1, 0});
  CHECK(parse_element(g, "0 1/2 -3 0") == RatVector{0, Rational(1, 2), -3, 0});
  CHECK(parse_element(g, "0,0,0,0") == RatVector(4));
  CHECK_THROWS_AS(parse_element(g, "1 2"), ParseError);
  CHECK_THROWS_AS(parse_element(g, "E99=1"), ParseError);
}
