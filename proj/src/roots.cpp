#include "superkit/roots.hpp"

#include <algorithm>
#include <random>

#include "superkit/errors.hpp"
#include "superkit/families.hpp"

namespace superkit {

const RootSpace* RootDatum::find(const RatVector& weight, Parity parity) const {
  for (const auto& r : roots)
    if (r.parity == parity && r.weight == weight) return &r;
  return nullptr;
}

namespace {

// Matrix of a on the span of `basis`, assumed invariant.
RatMatrix restrict_to(const RatMatrix& a, const std::vector<RatVector>& basis) {
  const RatMatrix cols = RatMatrix::from_columns(basis, a.rows());
  RatMatrix local(basis.size(), basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const auto c = solve_linear(cols, a.apply(basis[b]));
    if (!c) throw NonSemisimpleCartanAction("Cartan elements do not preserve each other's eigenspaces");
    for (std::size_t r = 0; r < basis.size(); ++r) local(r, b) = (*c)[r];
  }
  return local;
}

bool ad_semisimple_rational(const LieSuperalgebra& g, const RatVector& x) {
  return splits_squarefree(minimal_polynomial(ad_matrix(g, x)));
}

RatVector combine(const std::vector<RatVector>& basis, const RatVector& coeffs, std::size_t dim) {
  RatVector out(dim);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coeffs[i].is_zero()) add_scaled(out, coeffs[i], basis[i]);
  return out;
}

}  // namespace

RootDatum root_decomposition(const LieSuperalgebra& g, const std::vector<RatVector>& cartan) {
  const std::size_t n = g.dim();
  for (const auto& t : cartan)
    if (!is_even_element(g, t)) throw NotEven("root_decomposition: Cartan element is not even");
  for (std::size_t i = 0; i < cartan.size(); ++i)
    for (std::size_t j = i + 1; j < cartan.size(); ++j)
      if (!is_zero(bracket(g, cartan[i], cartan[j])))
        throw InvalidArgument("root_decomposition: Cartan elements do not commute");

  std::vector<RatMatrix> ads;
  for (const auto& t : cartan) {
    ads.push_back(ad_matrix(g, t));
    if (!splits_squarefree(minimal_polynomial(ads.back()))) {
      throw NonSemisimpleCartanAction("ad(" + format_element(g, t) + ") is not diagonalizable over Q");
    }
  }

  RootDatum rd;
  rd.cartan = cartan;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const auto& idx = p == Parity::Even ? g.even_indices() : g.odd_indices();
    if (idx.empty()) continue;
    std::vector<RootSpace> pieces(1);
    pieces[0].parity = p;
    for (auto i : idx) pieces[0].basis.push_back(g.basis_vector(i));
    for (const auto& a : ads) {
      std::vector<RootSpace> next;
      for (const auto& piece : pieces) {
        const RatMatrix local = restrict_to(a, piece.basis);
        const RatMatrix cols = RatMatrix::from_columns(piece.basis, n);
        for (const auto& es : rational_eigenspaces(local)) {
          RootSpace r;
          r.parity = p;
          r.weight = piece.weight;
          r.weight.push_back(es.value);
          for (const auto& v : es.basis) r.basis.push_back(cols.apply(v));
          next.push_back(std::move(r));
        }
      }
      pieces = std::move(next);
    }
    for (auto& r : pieces) {
      if (r.weight.empty()) r.weight = RatVector(cartan.size());
      r.basis = span_basis(r.basis, n);
      rd.roots.push_back(std::move(r));
    }
  }
  std::sort(rd.roots.begin(), rd.roots.end(), [](const RootSpace& a, const RootSpace& b) {
    if (a.parity != b.parity) return a.parity == Parity::Even;
    return a.weight < b.weight;
  });
  return rd;
}

std::vector<RatVector> find_cartan(const LieSuperalgebra& g, std::uint64_t seed, int attempts_per_step) {
  const std::size_t n = g.dim();
  std::mt19937_64 rng(seed);
  std::vector<RatVector> t;
  while (true) {
    std::vector<RatVector> c;
    if (t.empty()) {
      for (auto i : g.even_indices()) c.push_back(g.basis_vector(i));
    } else {
      c = even_centralizer(g, t);
    }
    if (span_rank(c, n) == t.size()) return t;

    std::vector<std::size_t> order(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);

    bool grown = false;
    for (int attempt = 0; attempt < attempts_per_step && !grown; ++attempt) {
      RatVector coeffs(c.size());
      if (static_cast<std::size_t>(attempt) < c.size()) {
        coeffs[order[attempt]] = 1;
      } else {
        const int terms = 2 + attempt % 3;
        for (int k = 0; k < terms; ++k) coeffs[pick(rng)] = coeff(rng);
      }
      const RatVector x = combine(c, coeffs, n);
      if (is_zero(x) || (!t.empty() && in_span(t, x))) continue;
      if (!ad_semisimple_rational(g, x)) continue;
      t.push_back(x);
      grown = true;
    }
    if (!grown) {
      throw CartanSearchFailed(g.name() + ": no ad-semisimple element with rational spectrum found after " +
                               std::to_string(attempts_per_step) + " attempts");
    }
  }
}

std::vector<RatVector> cartan_or_search(const LieSuperalgebra& g, std::uint64_t seed) {
  if (!g.cartan().empty()) return g.cartan();
  return find_cartan(g, seed);
}

ClassificationOutcome ClassificationOutcome::osp(int n, std::vector<RatVector> map) {
  ClassificationOutcome o;
  o.kind = Kind::Osp;
  o.n = n;
  o.basis_map = std::move(map);
  o.reason = "isomorphic to osp(1|" + std::to_string(2 * n) + ")";
  return o;
}

ClassificationOutcome ClassificationOutcome::found(RatVector u, std::string reason) {
  ClassificationOutcome o;
  o.kind = Kind::Witness;
  o.witness = std::move(u);
  o.reason = std::move(reason);
  return o;
}

ClassificationOutcome ClassificationOutcome::inconclusive(std::string reason) {
  ClassificationOutcome o;
  o.kind = Kind::Inconclusive;
  o.reason = std::move(reason);
  return o;
}

std::string to_string(ClassificationOutcome::Kind kind) {
  switch (kind) {
    case ClassificationOutcome::Kind::Osp: return "osp";
    case ClassificationOutcome::Kind::Witness: return "witness";
    case ClassificationOutcome::Kind::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// v = x v1 + v2 with v^2 = 0, x rational: every coordinate of
// x^2 v1^2 + x [v1, v2] + v2^2 must vanish.
std::optional<RatVector> isotropic_in_pair(const LieSuperalgebra& g, const RatVector& v1, const RatVector& v2) {
  const RatVector a = odd_square(g, v1);
  const RatVector b = bracket(g, v1, v2);
  const RatVector c = odd_square(g, v2);
  RatPoly common;
  bool any = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    RatPoly p({c[k], b[k], a[k]});
    if (p.is_zero()) continue;
    common = any ? gcd(common, p) : p.monic();
    any = true;
  }
  Rational x = 1;
  if (any) {
    const auto roots = rational_roots(common);
    if (common.degree() < 1 || roots.empty()) return std::nullopt;
    x = roots.front();
  }
  RatVector v = scaled(v1, x);
  add_scaled(v, 1, v2);
  if (is_zero(v) || !is_zero(odd_square(g, v))) return std::nullopt;
  return v;
}

// Steps that can produce a witness from a single odd root space.
std::optional<ClassificationOutcome> examine_odd_root(const LieSuperalgebra& g, const RootDatum& rd,
                                                      const RootSpace& r) {
  const std::string where = "odd root " + to_string(r.weight);
  if (r.is_zero_weight()) {
    const RatVector& u = r.basis.front();
    if (in_g1ss(g, u)) return ClassificationOutcome::found(u, where + " is zero, so u^2 lies in the Cartan");
    return ClassificationOutcome::inconclusive(where + " is zero but u^2 is not semisimple in the faithful rep");
  }
  for (const auto& u : r.basis)
    if (is_zero(odd_square(g, u))) return ClassificationOutcome::found(u, where + " has a root vector with u^2 = 0");
  if (r.basis.size() > 1) {
    for (std::size_t i = 0; i < r.basis.size(); ++i)
      for (std::size_t j = 0; j < r.basis.size(); ++j)
        if (i != j)
          if (auto v = isotropic_in_pair(g, r.basis[i], r.basis[j]))
            return ClassificationOutcome::found(*v, where + " has dimension " + std::to_string(r.basis.size()) +
                                                        "; isotropic combination");
    return ClassificationOutcome::inconclusive(where + " has dimension " + std::to_string(r.basis.size()) +
                                               " and no rational vector with u^2 = 0");
  }
  if (!rd.find(scaled(r.weight, 2), Parity::Even)) {
    return ClassificationOutcome::inconclusive(where + ": twice the weight is not an even root");
  }
  return std::nullopt;
}

// Form B on g1 read off from [[u, u], w] = 2 B(u, w) u, then a Darboux basis
// and the induced map from build_osp1(n).
ClassificationOutcome osp_isomorphism(const LieSuperalgebra& g) {
  const auto& odd = g.odd_indices();
  const std::size_t m = odd.size();
  if (m % 2 != 0) return ClassificationOutcome::inconclusive("odd part has odd dimension");
  const int n = static_cast<int>(m / 2);
  if (g.even_dim() != static_cast<std::size_t>(n * (2 * n + 1))) {
    return ClassificationOutcome::inconclusive("even part does not have the dimension of sp(" + std::to_string(m) + ")");
  }
  std::vector<std::vector<Rational>> form(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i) {
    const RatVector ui = g.basis_vector(odd[i]);
    const RatVector sq = bracket(g, ui, ui);
    for (std::size_t k = 0; k < m; ++k) {
      RatVector w = bracket(g, sq, g.basis_vector(odd[k]));
      const Rational c = w[odd[i]] / 2;
      add_scaled(w, -(c + c), ui);
      if (!is_zero(w)) return ClassificationOutcome::inconclusive("g1 is not the standard module of a symplectic form");
      form[i][k] = c;
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (form[i][j] != -form[j][i]) return ClassificationOutcome::inconclusive("odd form is not antisymmetric");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const RatVector br = bracket(g, g.basis_vector(odd[i]), g.basis_vector(odd[j]));
      for (std::size_t k = 0; k < m; ++k) {
        RatVector expect(g.dim());
        expect[odd[j]] += form[i][k];
        expect[odd[i]] += form[j][k];
        if (bracket(g, br, g.basis_vector(odd[k])) != expect) {
          return ClassificationOutcome::inconclusive("[[u, v], w] differs from B(u, w) v + B(v, w) u");
        }
      }
    }
  }

  // Symplectic Gram-Schmidt in odd coordinates.
  auto B = [&](const RatVector& x, const RatVector& y) {
    Rational s;
    for (std::size_t i = 0; i < m; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!y[j].is_zero() && !form[i][j].is_zero()) s += x[i] * form[i][j] * y[j];
    }
    return s;
  };
  std::vector<RatVector> rest;
  for (std::size_t i = 0; i < m; ++i) rest.push_back(unit_vector(m, i));
  std::vector<RatVector> as, bs;
  while (!rest.empty()) {
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t e = 0; e < rest.size() && !pair; ++e)
      for (std::size_t f = 0; f < rest.size() && !pair; ++f)
        if (!B(rest[e], rest[f]).is_zero()) pair.emplace(e, f);
    if (!pair) return ClassificationOutcome::inconclusive("odd form is degenerate");
    const auto [e, f] = *pair;
    const RatVector a = rest[e];
    const RatVector b = scaled(rest[f], Rational(1) / B(rest[e], rest[f]));
    std::vector<RatVector> next;
    for (std::size_t r = 0; r < rest.size(); ++r) {
      if (r == e || r == f) continue;
      RatVector v = rest[r];
      const Rational vb = B(v, b), va = B(v, a);
      add_scaled(v, -vb, a);
      add_scaled(v, va, b);
      if (!is_zero(v)) next.push_back(std::move(v));
    }
    as.push_back(a);
    bs.push_back(b);
    rest = span_basis(next, m);
  }
  auto to_g = [&](const RatVector& v) {
    RatVector x(g.dim());
    for (std::size_t i = 0; i < m; ++i) x[odd[i]] = v[i];
    return x;
  };

  const LieSuperalgebra osp = build_osp1(n);
  std::vector<RatVector> images(osp.dim());
  for (int i = 1; i <= n; ++i) {
    images[*osp.index_of("a" + std::to_string(i))] = to_g(as[i - 1]);
    images[*osp.index_of("b" + std::to_string(i))] = to_g(bs[i - 1]);
  }
  // Even basis elements of osp as combinations of odd brackets.
  const auto& oodd = osp.odd_indices();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<RatVector> brs;
  for (std::size_t p = 0; p < oodd.size(); ++p)
    for (std::size_t q = p; q < oodd.size(); ++q) {
      pairs.emplace_back(oodd[p], oodd[q]);
      brs.push_back(osp.basis_bracket(oodd[p], oodd[q]));
    }
  const RatMatrix cols = RatMatrix::from_columns(brs, osp.dim());
  for (auto x : osp.even_indices()) {
    const auto c = solve_linear(cols, osp.basis_vector(x));
    if (!c) return ClassificationOutcome::inconclusive("reference osp even part is not spanned by odd brackets");
    RatVector img(g.dim());
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (!(*c)[k].is_zero()) add_scaled(img, (*c)[k], bracket(g, images[pairs[k].first], images[pairs[k].second]));
    images[x] = std::move(img);
  }
  if (!is_isomorphism(osp, g, images)) {
    return ClassificationOutcome::inconclusive("candidate map from osp(1|" + std::to_string(m) +
                                               ") does not preserve brackets");
  }
  return ClassificationOutcome::osp(n, std::move(images));
}

}  // namespace

bool is_isomorphism(const LieSuperalgebra& src, const LieSuperalgebra& dst, const std::vector<RatVector>& images) {
  if (images.size() != src.dim() || src.dim() != dst.dim()) return false;
  for (std::size_t i = 0; i < src.dim(); ++i) {
    if (images[i].size() != dst.dim()) return false;
    const bool ok = src.parity(i) == Parity::Even ? is_even_element(dst, images[i]) : is_odd_element(dst, images[i]);
    if (!ok) return false;
  }
  if (span_rank(images, dst.dim()) != src.dim()) return false;
  for (std::size_t i = 0; i < src.dim(); ++i) {
    for (std::size_t j = 0; j < src.dim(); ++j) {
      RatVector lhs(dst.dim());
      for (const auto& t : src.structure(i, j)) add_scaled(lhs, t.coeff, images[t.index]);
      if (lhs != bracket(dst, images[i], images[j])) return false;
    }
  }
  return true;
}

ClassificationOutcome classify_simple(const LieSuperalgebra& g, const std::vector<RatVector>& cartan) {
  if (g.odd_dim() == 0) return ClassificationOutcome::inconclusive("g1 = 0");
  RootDatum rd;
  try {
    rd = root_decomposition(g, cartan);
  } catch (const Error& e) {
    return ClassificationOutcome::inconclusive(std::string("root decomposition failed: ") + e.what());
  }
  const RootSpace* zero = rd.find(RatVector(cartan.size()), Parity::Even);
  if (!zero || zero->basis.size() != cartan.size()) {
    return ClassificationOutcome::inconclusive("Cartan is not self-centralizing in g0");
  }
  for (const auto& r : rd.roots) {
    if (r.parity != Parity::Odd) continue;
    if (auto o = examine_odd_root(g, rd, r)) {
      if (o->kind == ClassificationOutcome::Kind::Witness && (is_zero(o->witness) || !in_g1ss(g, o->witness))) {
        return ClassificationOutcome::inconclusive("candidate witness failed the g1ss check");
      }
      return *o;
    }
  }
  return osp_isomorphism(g);
}

namespace {

// Witness search over the odd roots of an algebra that did not split.
ScanResult fallback_scan(const LieSuperalgebra& g, const std::vector<RatVector>& cartan, const std::string& why) {
  ScanResult res;
  res.used_fallback = true;
  RootDatum rd;
  try {
    rd = root_decomposition(g, cartan);
  } catch (const Error& e) {
    res.reason = why + "; root decomposition failed: " + e.what();
    return res;
  }
  for (const auto& r : rd.roots) {
    if (r.parity != Parity::Odd) continue;
    std::vector<RatVector> candidates = r.basis;
    if (r.is_zero_weight()) candidates.resize(1);
    for (std::size_t i = 0; i < r.basis.size(); ++i)
      for (std::size_t j = 0; j < r.basis.size(); ++j)
        if (i != j)
          if (auto v = isotropic_in_pair(g, r.basis[i], r.basis[j])) candidates.push_back(*v);
    for (const auto& u : candidates) {
      if (!is_zero(u) && in_g1ss(g, u)) {
        res.witness = u;
        res.reason = why + "; odd root " + to_string(r.weight) + " gives a witness";
        return res;
      }
    }
  }
  res.reason = why + "; no odd root vector lies in g1ss";
  return res;
}

}  // namespace

ScanResult g1ss_structural_scan(const LieSuperalgebra& g, const std::vector<RatVector>& cartan_in,
                                std::uint64_t seed) {
  const std::size_t n = g.dim();
  ScanResult res;
  if (g.odd_dim() == 0) {
    res.certified_zero = true;
    res.reason = "g1 = 0";
    return res;
  }
  const std::vector<RatVector> cartan = cartan_in.empty() ? cartan_or_search(g, seed) : cartan_in;
  Decomposition dec;
  try {
    dec = direct_sum_decompose(g);
  } catch (const NotSemisimpleStructure& e) {
    return fallback_scan(g, cartan, e.what());
  }
  for (const auto& z : dec.center) {
    const RatVector zo = odd_part(g, z);
    if (!is_zero(zo)) {
      res.witness = zo;
      res.reason = "odd central element";
      return res;
    }
  }

  // Coordinates of g in center + ideals, to project the Cartan onto each factor.
  std::vector<RatVector> all = dec.center;
  std::vector<std::size_t> offsets;
  for (const auto& ideal : dec.ideals) {
    offsets.push_back(all.size());
    all.insert(all.end(), ideal.begin(), ideal.end());
  }
  const RatMatrix cols = RatMatrix::from_columns(all, n);
  std::vector<RatVector> cartan_coords;
  for (const auto& t : cartan) {
    const auto c = solve_linear(cols, t);
    if (!c) throw NotSemisimpleStructure("decomposition does not span g");
    cartan_coords.push_back(*c);
  }

  bool all_osp = true;
  for (std::size_t k = 0; k < dec.ideals.size(); ++k) {
    const auto& ideal = dec.ideals[k];
    ScanFactor f;
    f.ideal = ideal;
    for (const auto& v : ideal) (is_even_element(g, v) ? f.even_dim : f.odd_dim)++;
    if (f.odd_dim == 0) {
      f.outcome.reason = "purely even";
      res.factors.push_back(std::move(f));
      continue;
    }
    const LieSuperalgebra factor = restrict_to_subalgebra(g, ideal, g.name() + "/I" + std::to_string(k + 1));
    std::vector<RatVector> fcartan;
    for (const auto& c : cartan_coords) {
      RatVector p(ideal.size());
      for (std::size_t a = 0; a < ideal.size(); ++a) p[a] = c[offsets[k] + a];
      fcartan.push_back(std::move(p));
    }
    fcartan = span_basis(fcartan, ideal.size());
    f.outcome = classify_simple(factor, fcartan);
    if (f.outcome.kind == ClassificationOutcome::Kind::Witness) {
      RatVector u(n);
      for (std::size_t a = 0; a < ideal.size(); ++a) add_scaled(u, f.outcome.witness[a], ideal[a]);
      if (!is_zero(u) && in_g1ss(g, u)) {
        res.witness = u;
        res.reason = "factor " + std::to_string(k + 1) + ": " + f.outcome.reason;
        res.factors.push_back(std::move(f));
        return res;
      }
      f.outcome = ClassificationOutcome::inconclusive("factor witness failed the g1ss check in g");
    }
    if (f.outcome.kind != ClassificationOutcome::Kind::Osp) {
      all_osp = false;
      if (res.reason.empty()) res.reason = "factor " + std::to_string(k + 1) + ": " + f.outcome.reason;
    }
    res.factors.push_back(std::move(f));
  }
  res.certified_zero = all_osp;
  if (all_osp) res.reason = "every odd factor is osp(1|2n)";
  return res;
}

std::optional<RatVector> sample_g1ss(const LieSuperalgebra& g, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::bernoulli_distribution sparse(0.5);
  for (std::size_t s = 0; s < samples; ++s) {
    RatVector u(g.dim());
    const bool thin = sparse(rng);
    for (auto i : g.odd_indices()) {
      const int c = coeff(rng);
      if (thin && c < 0) continue;
      u[i] = c;
    }
    if (!is_zero(u) && in_g1ss(g, u)) return u;
  }
  return std::nullopt;
}

}  // namespace superkit
