#include "superkit/families.hpp"

#include <sstream>

#include "superkit/errors.hpp"

namespace superkit {

namespace {

std::string unit_label(const std::string& stem, int a, int b, int size) {
  if (size <= 9) return stem + std::to_string(a) + std::to_string(b);
  return stem + std::to_string(a) + "_" + std::to_string(b);
}

RatMatrix matrix_unit(std::size_t n, std::size_t r, std::size_t c) {
  RatMatrix m(n, n);
  m(r, c) = 1;
  return m;
}

// Solves for coordinates of matrices in the span of a fixed matrix basis.
class MatrixCoordinates {
 public:
  explicit MatrixCoordinates(const std::vector<RatMatrix>& basis) : dim_(basis.size()) {
    if (basis.empty()) return;
    cells_ = basis.front().rows() * basis.front().cols();
    RatMatrix aug(dim_, cells_ + dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      const auto& e = basis[i].entries();
      for (std::size_t c = 0; c < cells_; ++c) aug(i, c) = e[c];
      aug(i, cells_ + i) = 1;
    }
    RowEchelon red = row_reduce(std::move(aug));
    for (std::size_t r = 0; r < red.pivots.size(); ++r) {
      if (red.pivots[r] >= cells_) throw InvalidArgument("matrix basis is linearly dependent");
    }
    if (red.pivots.size() != dim_) throw InvalidArgument("matrix basis is linearly dependent");
    pivots_ = red.pivots;
    reduced_ = std::move(red.reduced);
  }

  RatVector coordinates(const RatMatrix& x) const {
    const auto& e = x.entries();
    RatVector c(dim_);
    RatVector rebuilt(cells_);
    for (std::size_t r = 0; r < dim_; ++r) {
      const Rational& w = e[pivots_[r]];
      if (w.is_zero()) continue;
      for (std::size_t i = 0; i < dim_; ++i) c[i] += w * reduced_(r, cells_ + i);
      for (std::size_t k = 0; k < cells_; ++k) {
        if (!reduced_(r, k).is_zero()) rebuilt[k] += w * reduced_(r, k);
      }
    }
    if (rebuilt != e) throw InvalidArgument("matrix lies outside the span of the basis");
    return c;
  }

 private:
  std::size_t dim_;
  std::size_t cells_ = 0;
  std::vector<std::size_t> pivots_;
  RatMatrix reduced_;
};

}  // namespace

LieSuperalgebra from_matrix_basis(std::string name, std::vector<std::string> labels,
                                  std::vector<Parity> parity, const std::vector<RatMatrix>& matrices,
                                  const std::vector<Parity>& vector_parity) {
  LieSuperalgebra g(std::move(name), std::move(labels), std::move(parity));
  const MatrixCoordinates coords(matrices);
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i; j < g.dim(); ++j) {
      const RatMatrix br = commutator(matrices[i], matrices[j], koszul_sign(g.parity(i), g.parity(j)));
      g.set_bracket_pair(i, j, coords.coordinates(br));
    }
  }
  g.set_faithful_rep(SuperModule{vector_parity, matrices});
  return g;
}

LieSuperalgebra build_gl(int m, int n) {
  if (m < 0 || n < 0 || m + n < 1) throw InvalidArgument("gl(m|n) needs m, n >= 0 and m + n >= 1");
  const int size = m + n;
  std::vector<Parity> vpar;
  for (int a = 0; a < size; ++a) vpar.push_back(a < m ? Parity::Even : Parity::Odd);
  std::vector<std::string> labels;
  std::vector<Parity> parity;
  std::vector<RatMatrix> mats;
  std::vector<std::size_t> diag;
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      if (a == b) diag.push_back(mats.size());
      labels.push_back(unit_label("E", a + 1, b + 1, size));
      parity.push_back(vpar[a] + vpar[b]);
      mats.push_back(matrix_unit(size, a, b));
    }
  }
  auto g = from_matrix_basis("gl(" + std::to_string(m) + "|" + std::to_string(n) + ")", labels, parity,
                             mats, vpar);
  std::vector<RatVector> cartan;
  for (auto i : diag) cartan.push_back(g.basis_vector(i));
  g.set_cartan(std::move(cartan));
  return g;
}

LieSuperalgebra build_sl(int m, int n) {
  if (m < 1 || n < 1) throw InvalidArgument("sl(m|n) needs m, n >= 1");
  const int size = m + n;
  std::vector<Parity> vpar;
  for (int a = 0; a < size; ++a) vpar.push_back(a < m ? Parity::Even : Parity::Odd);
  std::vector<std::string> labels;
  std::vector<Parity> parity;
  std::vector<RatMatrix> mats;
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      if (a == b) continue;
      labels.push_back(unit_label("E", a + 1, b + 1, size));
      parity.push_back(vpar[a] + vpar[b]);
      mats.push_back(matrix_unit(size, a, b));
    }
  }
  std::vector<std::size_t> diag;
  for (int i = 0; i + 1 < size; ++i) {
    RatMatrix h(size, size);
    h(i, i) = 1;
    // supertrace: (-1)^{p(i)} - s (-1)^{p(i+1)} = 0
    h(i + 1, i + 1) = -koszul_sign(vpar[i] + vpar[i + 1], Parity::Odd);
    diag.push_back(mats.size());
    labels.push_back("h" + std::to_string(i + 1));
    parity.push_back(Parity::Even);
    mats.push_back(std::move(h));
  }
  auto g = from_matrix_basis("sl(" + std::to_string(m) + "|" + std::to_string(n) + ")", labels, parity,
                             mats, vpar);
  std::vector<RatVector> cartan;
  for (auto i : diag) cartan.push_back(g.basis_vector(i));
  g.set_cartan(std::move(cartan));
  return g;
}

LieSuperalgebra build_osp1(int n) {
  if (n < 1) throw InvalidArgument("osp(1|2n) needs n >= 1");
  const std::size_t size = 1 + 2 * static_cast<std::size_t>(n);
  // Module basis: e0 (even), a_1..a_n, b_1..b_n (odd).
  auto a = [](int i) { return static_cast<std::size_t>(i); };
  auto b = [n](int i) { return static_cast<std::size_t>(n + i); };
  std::vector<Parity> vpar(size, Parity::Odd);
  vpar[0] = Parity::Even;

  std::vector<std::string> labels;
  std::vector<Parity> parity;
  std::vector<RatMatrix> mats;
  std::vector<std::size_t> cartan_idx;
  auto add_even = [&](std::string label, RatMatrix m) {
    labels.push_back(std::move(label));
    parity.push_back(Parity::Even);
    mats.push_back(std::move(m));
  };
  for (int i = 1; i <= n; ++i) {
    RatMatrix h(size, size);
    h(a(i), a(i)) = 1;
    h(b(i), b(i)) = -1;
    cartan_idx.push_back(mats.size());
    add_even("H" + std::to_string(i), std::move(h));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      RatMatrix x(size, size);
      x(a(i), a(j)) = 1;
      x(b(j), b(i)) = -1;
      add_even("A" + std::to_string(i) + std::to_string(j), std::move(x));
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      RatMatrix x(size, size);
      x(a(i), b(j)) = 1;
      x(a(j), b(i)) = 1;
      add_even("B" + std::to_string(i) + std::to_string(j), std::move(x));
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      RatMatrix x(size, size);
      x(b(i), a(j)) = 1;
      x(b(j), a(i)) = 1;
      add_even("C" + std::to_string(i) + std::to_string(j), std::move(x));
    }
  }
  // Odd generators: rho(u) e0 = u, rho(u) w = (u, w) e0.
  for (int i = 1; i <= n; ++i) {
    RatMatrix x(size, size);
    x(a(i), 0) = 1;
    x(0, b(i)) = 1;  // (a_i, b_i) = 1
    labels.push_back("a" + std::to_string(i));
    parity.push_back(Parity::Odd);
    mats.push_back(std::move(x));
  }
  for (int i = 1; i <= n; ++i) {
    RatMatrix x(size, size);
    x(b(i), 0) = 1;
    x(0, a(i)) = -1;  // (b_i, a_i) = -1
    labels.push_back("b" + std::to_string(i));
    parity.push_back(Parity::Odd);
    mats.push_back(std::move(x));
  }
  auto g = from_matrix_basis("osp(1|" + std::to_string(2 * n) + ")", labels, parity, mats, vpar);
  std::vector<RatVector> cartan;
  for (auto i : cartan_idx) cartan.push_back(g.basis_vector(i));
  g.set_cartan(std::move(cartan));
  return g;
}

LieSuperalgebra build_toy(ToyKind kind) {
  if (kind == ToyKind::OddNilpotent) {
    LieSuperalgebra g("toy_odd_nilpotent", {"u"}, {Parity::Odd});
    RatMatrix u(2, 2);
    u(0, 1) = 1;
    g.set_faithful_rep(SuperModule{{Parity::Even, Parity::Odd}, {u}});
    return g;
  }
  LieSuperalgebra g("toy_odd_semisimple", {"h", "u"}, {Parity::Even, Parity::Odd});
  g.set_structure_constant(1, 1, 0, 2);  // [u, u] = 2h
  // 2|2 representation: two 1|1 blocks on which u squares to +1 and -1.
  RatMatrix u(4, 4);
  u(1, 0) = 1;
  u(0, 1) = 1;
  u(3, 2) = 1;
  u(2, 3) = -1;
  RatMatrix h = u * u;
  g.set_faithful_rep(SuperModule{{Parity::Even, Parity::Odd, Parity::Even, Parity::Odd}, {h, u}});
  g.set_cartan({g.basis_vector(0)});
  return g;
}

LieSuperalgebra build_torus(int k) {
  if (k < 1) throw InvalidArgument("torus dimension must be positive");
  std::vector<std::string> labels;
  std::vector<RatMatrix> mats;
  std::vector<RatVector> cartan;
  for (int i = 0; i < k; ++i) {
    labels.push_back("t" + std::to_string(i + 1));
    mats.push_back(matrix_unit(static_cast<std::size_t>(k), i, i));
  }
  LieSuperalgebra g("torus(" + std::to_string(k) + ")", labels,
                    std::vector<Parity>(static_cast<std::size_t>(k), Parity::Even));
  g.set_faithful_rep(SuperModule{std::vector<Parity>(static_cast<std::size_t>(k), Parity::Even), mats});
  for (int i = 0; i < k; ++i) cartan.push_back(g.basis_vector(static_cast<std::size_t>(i)));
  g.set_cartan(std::move(cartan));
  return g;
}

LieSuperalgebra build_product(const std::vector<LieSuperalgebra>& factors) {
  std::vector<std::string> labels;
  std::vector<Parity> parity;
  std::vector<std::size_t> offset;
  std::string name;
  bool all_reps = true;
  std::size_t rep_dim = 0;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const auto& g = factors[f];
    offset.push_back(labels.size());
    name += (f ? " x " : "") + g.name();
    for (std::size_t i = 0; i < g.dim(); ++i) {
      labels.push_back(factors.size() > 1 ? g.label(i) + "@" + std::to_string(f + 1) : g.label(i));
      parity.push_back(g.parity(i));
    }
    if (g.faithful_rep()) {
      rep_dim += g.faithful_rep()->dim();
    } else {
      all_reps = false;
    }
  }
  if (factors.empty()) name = "zero";
  LieSuperalgebra p(name, labels, parity);
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const auto& g = factors[f];
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j)
        for (const auto& t : g.structure(i, j))
          p.set_structure_constant(offset[f] + i, offset[f] + j, offset[f] + t.index, t.coeff);
  }
  if (all_reps) {
    SuperModule rep;
    std::size_t block = 0;
    for (const auto& g : factors) {
      rep.parity.insert(rep.parity.end(), g.faithful_rep()->parity.begin(), g.faithful_rep()->parity.end());
    }
    for (const auto& g : factors) {
      const std::size_t d = g.faithful_rep()->dim();
      for (std::size_t i = 0; i < g.dim(); ++i) {
        RatMatrix m(rep_dim, rep_dim);
        const RatMatrix& src = g.faithful_rep()->action[i];
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c) m(block + r, block + c) = src(r, c);
        rep.action.push_back(std::move(m));
      }
      block += d;
    }
    p.set_faithful_rep(std::move(rep));
  }
  std::vector<RatVector> cartan;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    for (const auto& t : factors[f].cartan()) {
      RatVector x(p.dim());
      for (std::size_t i = 0; i < t.size(); ++i) x[offset[f] + i] = t[i];
      cartan.push_back(std::move(x));
    }
  }
  p.set_cartan(std::move(cartan));
  return p;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

int parse_int(const std::string& s, const std::string& spec) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + s + "' in family spec '" + spec + "'");
  }
}

}  // namespace

LieSuperalgebra build_family(const std::string& spec) {
  if (spec.rfind("product:", 0) == 0) {
    std::vector<LieSuperalgebra> factors;
    const std::string rest = spec.substr(8);
    if (!rest.empty()) {
      for (const auto& part : split(rest, ',')) factors.push_back(build_family(part));
    }
    return build_product(factors);
  }
  const auto parts = split(spec, ':');
  if (parts.empty()) throw ParseError("empty family spec");
  const std::string& kind = parts[0];
  auto expect = [&](std::size_t count) {
    if (parts.size() != count + 1) {
      throw ParseError("family '" + kind + "' expects " + std::to_string(count) + " parameter(s): '" + spec + "'");
    }
  };
  if (kind == "gl") {
    expect(2);
    return build_gl(parse_int(parts[1], spec), parse_int(parts[2], spec));
  }
  if (kind == "sl") {
    expect(2);
    return build_sl(parse_int(parts[1], spec), parse_int(parts[2], spec));
  }
  if (kind == "osp1") {
    expect(1);
    return build_osp1(parse_int(parts[1], spec));
  }
  if (kind == "torus") {
    expect(1);
    return build_torus(parse_int(parts[1], spec));
  }
  if (kind == "toy_odd_nilpotent") {
    expect(0);
    return build_toy(ToyKind::OddNilpotent);
  }
  if (kind == "toy_odd_semisimple") {
    expect(0);
    return build_toy(ToyKind::OddSemisimple);
  }
  throw ParseError("unknown family '" + kind + "'");
}

}  // namespace superkit
