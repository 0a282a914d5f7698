#include "superkit/catalog.hpp"

#include "superkit/errors.hpp"
#include "superkit/families.hpp"
#include "superkit/reps.hpp"

namespace superkit {

const std::vector<std::string>& catalog_families() {
  static const std::vector<std::string> list = {"osp1:1", "osp1:2", "gl:1:1", "sl:2:1", "toy_odd_semisimple", "torus:1"};
  return list;
}

namespace {
std::size_t need(const LieSuperalgebra& g, const char* label) {
  auto i = g.index_of(label);
  if (!i) throw InvalidArgument(std::string("algebra has no basis element ") + label);
  return *i;
}
}  // namespace

SuperModule gl11_weight_module(const LieSuperalgebra& gl11, const Rational& a, const Rational& b) {
  SuperModule m{{Parity::Even, Parity::Odd}, std::vector<RatMatrix>(gl11.dim(), RatMatrix(2, 2))};
  RatMatrix& e11 = m.action[need(gl11, "E11")];
  RatMatrix& e22 = m.action[need(gl11, "E22")];
  e11(0, 0) = a;
  e11(1, 1) = a - 1;
  e22(0, 0) = b;
  e22(1, 1) = b + 1;
  m.action[need(gl11, "E21")](1, 0) = 1;
  m.action[need(gl11, "E12")](0, 1) = a + b;
  return m;
}

SuperModule random_gl11_module(const LieSuperalgebra& gl11, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 5), w(-2, 2);
  auto weight = [&] {
    const Rational a = w(rng);
    // a + b = 0 about a third of the time, where DS is nonzero
    const Rational b = (pick(rng) < 2) ? -a : Rational(w(rng));
    return gl11_weight_module(gl11, a, b);
  };
  switch (pick(rng)) {
    case 0: return trivial_module(gl11);
    case 1: return *gl11.faithful_rep();
    case 2: return dual(gl11, weight());
    case 3: return direct_sum(weight(), trivial_module(gl11));
    case 4: return direct_sum(weight(), weight());
    default: return weight();
  }
}

SuperModule random_toy_module(const LieSuperalgebra& toy, std::mt19937_64& rng) {
  const std::size_t u = need(toy, "u"), h = need(toy, "h");
  std::uniform_int_distribution<int> d(-1, 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    RatMatrix um(4, 4);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        um(r, 2 + c) = d(rng);
        um(2 + r, c) = d(rng);
      }
    const RatMatrix hm = um * um;
    if (!is_squarefree(minimal_polynomial(hm))) continue;
    SuperModule m{{Parity::Even, Parity::Even, Parity::Odd, Parity::Odd}, std::vector<RatMatrix>(toy.dim(), RatMatrix(4, 4))};
    m.action[u] = um;
    m.action[h] = hm;
    return m;
  }
  throw InvalidArgument("random_toy_module: sampling failed");
}

std::vector<CatalogModule> small_catalog_modules(std::size_t max_dim, std::uint64_t seed) {
  std::vector<CatalogModule> all;
  const auto gl = build_gl(1, 1);
  const auto osp = build_osp1(1);
  const auto toy = build_toy(ToyKind::OddSemisimple);
  const auto nil = build_toy(ToyKind::OddNilpotent);
  for (const auto* g : {&gl, &osp, &toy, &nil}) {
    all.push_back({*g, "trivial", trivial_module(*g)});
    all.push_back({*g, "defining", *g->faithful_rep()});
    all.push_back({*g, "induced", induced_trivial(*g)});
    if (g->dim() <= max_dim) all.push_back({*g, "adjoint", adjoint_module(*g)});
    all.push_back({*g, "dual defining", dual(*g, *g->faithful_rep())});
  }
  for (long a = -1; a <= 1; ++a)
    for (long b = -1; b <= 1; ++b)
      all.push_back({gl, "weight(" + std::to_string(a) + "," + std::to_string(b) + ")", gl11_weight_module(gl, a, b)});
  all.push_back({gl, "weight(1,-1)+trivial", direct_sum(gl11_weight_module(gl, 1, -1), trivial_module(gl))});
  all.push_back({gl, "weight(2,1)+trivial", direct_sum(gl11_weight_module(gl, 2, 1), trivial_module(gl))});
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 5; ++t) all.push_back({toy, "random " + std::to_string(t + 1), random_toy_module(toy, rng)});
  std::vector<CatalogModule> out;
  for (auto& c : all)
    if (c.module.dim() <= max_dim) out.push_back(std::move(c));
  return out;
}

}  // namespace superkit
