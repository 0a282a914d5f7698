#include "superkit/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "superkit/catalog.hpp"
#include "superkit/enveloping.hpp"
#include "superkit/errors.hpp"
#include "superkit/families.hpp"
#include "superkit/oracles.hpp"
#include "superkit/reps.hpp"
#include "superkit/supercomm.hpp"

namespace superkit {

bool VerifyReport::ok() const { return first_failure() == nullptr; }

const CriterionResult* VerifyReport::first_failure() const {
  for (const auto& r : results)
    if (!r.pass) return &r;
  return nullptr;
}

const std::vector<std::string>& criterion_keys() {
  static const std::vector<std::string> keys = {"construction", "classification", "ghost",      "djokovic",
                                                "crossval",     "ds",             "splitting", "properties"};
  return keys;
}

namespace {

struct Ctx {
  const VerifyOptions& opts;

  LieSuperalgebra family(const std::string& spec) const {
    LieSuperalgebra g = build_family(spec);
    if (!opts.corrupt_structure) return g;
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j)
        if (!g.structure(i, j).empty()) {
          const Term t = g.structure(i, j).front();
          g.set_structure_constant(i, j, t.index, t.coeff + Rational(1));
          return g;
        }
    return g;
  }

  std::uint64_t seed(std::uint64_t salt) const { return opts.seed * 1000003ULL + salt; }
};

class Recorder {
 public:
  explicit Recorder(CriterionResult& r) : r_(r) {}
  void expect(bool cond, std::string line) {
    for (std::size_t p; (p = line.find("\n  ")) != std::string::npos;) line.replace(p, 3, "; ");
    r_.details.push_back(std::string(cond ? "ok   " : "FAIL ") + line);
    if (!cond && r_.failure.empty()) r_.failure = line;
  }

 private:
  CriterionResult& r_;
};

Rational double_factorial(int n) {
  Rational df = 1;
  for (int k = 1; k <= 2 * n - 1; k += 2) df *= Rational(k);
  return df;
}

void construction(Ctx& ctx, Recorder& rec) {
  for (const char* spec : {"gl:1:1", "gl:2:1", "sl:2:1", "osp1:1", "osp1:2", "osp1:3", "product:osp1:1,gl:1:1",
                           "product:osp1:1,osp1:2"}) {
    const auto g = ctx.family(spec);
    const auto report = validate(g);
    rec.expect(report.ok(), std::string(spec) + " (" + std::to_string(g.even_dim()) + "|" +
                                std::to_string(g.odd_dim()) + "): " + report.summary(2));
  }
}

void classification(Ctx& ctx, Recorder& rec) {
  for (int n = 1; n <= 3; ++n) {
    const std::string spec = "osp1:" + std::to_string(n);
    const auto g = ctx.family(spec);
    const auto out = classify_simple(g, cartan_or_search(g, ctx.seed(n)));
    const bool osp = out.kind == ClassificationOutcome::Kind::Osp && out.n == n;
    const bool iso = osp && is_isomorphism(build_osp1(n), g, out.basis_map);
    rec.expect(iso, spec + ": " + to_string(out.kind) + "(" + std::to_string(out.n) + ")" +
                        (iso ? ", basis map preserves brackets" : ", " + out.reason));
  }
  for (const char* spec : {"sl:2:1", "gl:1:1"}) {
    const auto g = ctx.family(spec);
    const auto scan = g1ss_structural_scan(g, {}, ctx.seed(10));
    const bool good = scan.witness && !is_zero(*scan.witness) && is_odd_element(g, *scan.witness) &&
                      in_g1ss(g, *scan.witness);
    rec.expect(good, std::string(spec) + ": witness " + (scan.witness ? format_element(g, *scan.witness) : "none") +
                         (scan.used_fallback ? " (odd-root fallback)" : ""));
  }
}

void ghost(Ctx& ctx, Recorder& rec) {
  for (int n = 1; n <= 3; ++n) {
    const std::string spec = "osp1:" + std::to_string(n);
    const auto g = ctx.family(spec);
    const auto r = ghost_criterion(g, Side::Right);
    const auto d = verify_djokovic(n);
    const Rational expected = double_factorial(n);
    rec.expect(r.ghost.invariant_dim == 1 && r.verdict == GhostVerdict::Semisimple,
               spec + ": invariant dim " + std::to_string(r.ghost.invariant_dim) + ", " + to_string(r.verdict) +
                   ", coinvariant dim " + std::to_string(r.ghost.v.size()));
    const bool normalized = d.proportional_to_ghost && d.epsilon == expected &&
                            !d.antipode_image_right.empty() && d.antipode_image_right[0] == expected;
    rec.expect(normalized, spec + ": eps(v) = " + d.epsilon.to_string() + " with the product normalization, expected " +
                               expected.to_string() + "; eps = " + r.ghost.epsilon.to_string() +
                               " with the unit normalization");
  }
  for (const char* spec : {"gl:1:1", "toy_odd_semisimple"}) {
    const auto r = ghost_criterion(ctx.family(spec), Side::Right);
    rec.expect(r.verdict != GhostVerdict::Semisimple, std::string(spec) + ": invariant dim " +
                                                          std::to_string(r.ghost.invariant_dim) + ", eps = " +
                                                          r.ghost.epsilon.to_string() + ", " + to_string(r.verdict));
  }
}

void djokovic(Ctx&, Recorder& rec) {
  for (int n = 1; n <= 3; ++n) {
    const auto d = verify_djokovic(n);
    rec.expect(d.invariant_left && d.antipode_invariant_right && d.epsilon == d.expected_epsilon && d.ok(),
               "n = " + std::to_string(n) + ": v invariant in U/(U g0), S(v) invariant in U/(g0 U), eps(v) = " +
                   d.epsilon.to_string());
  }
}

void crossval(Ctx& ctx, Recorder& rec) {
  auto specs = catalog_families();
  specs.push_back("osp1:3");
  for (const auto& spec : specs) {
    const auto g = ctx.family(spec);
    const bool expected = spec.rfind("osp1:", 0) == 0 || spec.rfind("torus:", 0) == 0;
    const auto verdict = ghost_criterion(g).verdict;
    const bool module_ss = is_module_semisimple(g, induced_trivial(g));
    const bool ghost_ss = verdict == GhostVerdict::Semisimple;
    rec.expect(ghost_ss == module_ss && module_ss == expected,
               spec + ": ghost " + to_string(verdict) + ", induced module " +
                   (module_ss ? "semisimple" : "not semisimple"));
  }
}

std::string dims(const DSResult& d) { return std::to_string(d.even_dim) + "|" + std::to_string(d.odd_dim); }

void ds(Ctx& ctx, Recorder& rec) {
  const auto gl = ctx.family("gl:1:1");
  RatVector u(gl.dim());
  u[*gl.index_of("E12")] = 1;
  u[*gl.index_of("E21")] = 1;
  rec.expect(in_g1ss(gl, u), "gl:1:1: u = E12 + E21 lies in g1ss");
  const std::vector<std::pair<std::string, SuperModule>> named = {{"defining", *gl.faithful_rep()},
                                                                  {"induced", induced_trivial(gl)}};
  for (const auto& [name, m] : named) {
    const auto d = ds_functor(gl, u, m);
    rec.expect(d.even_dim == 0 && d.odd_dim == 0, "gl:1:1 " + name + ": DS_u = " + dims(d));
    const auto z = ds_functor(gl, RatVector(gl.dim()), m);
    rec.expect(z.even_dim + z.odd_dim == m.dim() && z.even_dim == m.even_dim(),
               "gl:1:1 " + name + ": DS_0 = " + dims(z) + " on a module of dim " + std::to_string(m.dim()));
  }

  const auto toy = ctx.family("toy_odd_semisimple");
  const RatVector utoy = toy.basis_vector(*toy.index_of("u"));
  std::mt19937_64 rng(ctx.seed(6));
  for (int which = 0; which < 2; ++which) {
    const auto& g = which == 0 ? gl : toy;
    const RatVector& x = which == 0 ? u : utoy;
    int good = 0, total = 0;
    std::string first_bad;
    for (int t = 0; t < 20; ++t, ++total) {
      const auto m = which == 0 ? random_gl11_module(g, rng) : random_toy_module(g, rng);
      const auto n = which == 0 ? random_gl11_module(g, rng) : random_toy_module(g, rng);
      const bool valid = validate_module(g, m).ok() && validate_module(g, n).ok();
      const auto rep = ds_tensor_check(g, x, m, n);
      if (valid && rep.ok()) {
        ++good;
      } else if (first_bad.empty()) {
        first_bad = ", pair " + std::to_string(t) + ": " +
                    (valid ? dims(rep.product) + " vs " + std::to_string(rep.expected_even) + "|" +
                                 std::to_string(rep.expected_odd)
                           : std::string("invalid module"));
      }
    }
    rec.expect(good == total, g.name() + ": DS(M (x) N) = DS(M) (x) DS(N) on " + std::to_string(good) + "/" +
                                  std::to_string(total) + " random pairs" + first_bad);
  }
}

void splitting(Ctx&, Recorder& rec) {
  for (const auto& p : supercomm_catalog()) {
    const bool valid = validate_algebra(p.algebra).ok() && validate_derivation(p.algebra, p.u).ok();
    if (!p.expect_splitting) {
      bool raised = false;
      try {
        splitting_witness(p.algebra, p.u);
      } catch (const Vanishing&) {
        raised = true;
      }
      rec.expect(valid && raised && !verify_no_splitting(p.algebra, p.u),
                 p.name + ": vanishing derivation rejected, 1 not in im u");
      continue;
    }
    const auto r = splitting_witness(p.algebra, p.u);
    const bool good = valid && p.u.apply(r.f) == p.algebra.unit() && p.algebra.is_homogeneous(r.f, Parity::Odd) &&
                      verify_no_splitting(p.algebra, p.u);
    rec.expect(good, p.name + ": f = " + format_element(p.algebra, r.f) + ", u(f) = 1, 1 in im u");
  }
}

std::vector<std::size_t> random_word(std::mt19937_64& rng, std::size_t dim, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), gen(0, dim - 1);
  std::vector<std::size_t> w(len(rng));
  for (auto& x : w) x = gen(rng);
  return w;
}

EnvelopingElement random_element(const Enveloping& u, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  EnvelopingElement x;
  for (int k = 0; k < 3; ++k) x.add(u.normal_form(random_word(rng, u.algebra().dim(), 3)), coef(rng));
  return x;
}

void properties(Ctx& ctx, Recorder& rec) {
  std::mt19937_64 rng(ctx.seed(8));
  int agree = 0, words = 0;
  for (const char* spec : {"osp1:1", "gl:1:1"}) {
    const auto g = ctx.family(spec);
    const Enveloping fast(g, PBWOrder::OddFirst);
    for (int t = 0; t < 500; ++t, ++words) {
      const auto w = random_word(rng, g.dim(), 6);
      const auto left = rewrite_normal_form(g, PBWOrder::OddFirst, w, RewriteStrategy::Leftmost);
      const auto right = rewrite_normal_form(g, PBWOrder::OddFirst, w, RewriteStrategy::Rightmost);
      agree += left == right && left == fast.normal_form(w);
    }
  }
  rec.expect(agree == words, "PBW confluence: " + std::to_string(agree) + "/" + std::to_string(words) + " words");

  int mult = 0, pairs = 0;
  for (const char* spec : {"osp1:1", "gl:1:1"}) {
    const auto g = ctx.family(spec);
    const Enveloping u(g);
    for (int t = 0; t < 500; ++t, ++pairs) {
      EnvelopingElement x = random_element(u, rng), y = random_element(u, rng);
      x.add(Monomial{}, Rational(t % 5));
      y.add(Monomial{}, Rational(t % 3 - 1));
      mult += counit(u.multiply(x, y)) == counit(x) * counit(y);
    }
  }
  rec.expect(mult == pairs,
             "counit multiplicative: " + std::to_string(mult) + "/" + std::to_string(pairs) + " pairs");

  // P J P^-1 is diagonalizable exactly when J has no nontrivial block.
  std::uniform_int_distribution<int> ev(-2, 2);
  std::bernoulli_distribution coin(0.5);
  int jordan_ok = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 4;
    RatMatrix j(n, n);
    bool has_block = false;
    for (std::size_t i = 0; i < n; ++i) j(i, i) = ev(rng);
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (j(i, i) == j(i + 1, i + 1) && coin(rng)) {
        j(i, i + 1) = 1;
        has_block = true;
      }
    const RatMatrix p = oracle::random_invertible(rng, n);
    const RatMatrix m = p * j * oracle::cramer_inverse(p);
    jordan_ok += is_rationally_diagonalizable(m) == !has_block && is_squarefree(minimal_polynomial(m)) == !has_block;
  }
  rec.expect(jordan_ok == 50, "semisimple-element test vs Jordan forms: " + std::to_string(jordan_ok) + "/50");

  int rad_ok = 0, modules = 0;
  std::string first_bad;
  for (const auto& c : small_catalog_modules(4, ctx.seed(9))) {
    ++modules;
    const bool good = validate_module(c.algebra, c.module).ok() &&
                      is_module_semisimple(c.algebra, c.module) == oracle::semisimple_by_submodules(c.module);
    rad_ok += good;
    if (!good && first_bad.empty()) first_bad = ", first mismatch " + c.algebra.name() + " " + c.name;
  }
  rec.expect(rad_ok == modules, "radical test vs submodule oracle: " + std::to_string(rad_ok) + "/" +
                                    std::to_string(modules) + " modules of dim <= 4" + first_bad);
}

struct Spec {
  const char* title;
  double budget;
  std::function<void(Ctx&, Recorder&)> run;
};

const std::vector<Spec>& specs() {
  static const std::vector<Spec> s = {
      {"construction soundness", 1.0, construction},
      {"classification", 5.0, classification},
      {"ghost criterion", 30.0, ghost},
      {"Djokovic element", 30.0, djokovic},
      {"ghost vs induced-module semisimplicity", 0.0, crossval},
      {"DS functor", 0.0, ds},
      {"splitting obstruction", 1.0, splitting},
      {"property suites", 0.0, properties},
  };
  return s;
}

int select(const std::string& filter) {
  if (filter.empty()) return 0;
  const auto& keys = criterion_keys();
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (filter == keys[i] || filter == std::to_string(i + 1)) return static_cast<int>(i + 1);
  throw InvalidArgument("unknown criterion filter '" + filter + "'");
}

}  // namespace

VerifyReport verify_all(const VerifyOptions& opts) {
  const int only = select(opts.filter);
  Ctx ctx{opts};
  VerifyReport report;
  for (std::size_t i = 0; i < specs().size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (only != 0 && only != id) continue;
    CriterionResult r;
    r.id = id;
    r.key = criterion_keys()[i];
    r.title = specs()[i].title;
    r.budget_seconds = specs()[i].budget;
    Recorder rec(r);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      specs()[i].run(ctx, rec);
    } catch (const std::exception& e) {
      rec.expect(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.budget_seconds > 0) {
      std::ostringstream os;
      os.precision(3);
      os << "runtime " << r.seconds << " s, bound " << r.budget_seconds << " s";
      rec.expect(r.seconds < r.budget_seconds, os.str());
    }
    r.pass = r.failure.empty();
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace superkit
