#include "superkit/liesuper.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "superkit/assoc.hpp"
#include "superkit/errors.hpp"

namespace superkit {

LieSuperalgebra::LieSuperalgebra(std::string name, std::vector<std::string> labels,
                                 std::vector<Parity> parity)
    : name_(std::move(name)), labels_(std::move(labels)), parity_(std::move(parity)) {
  if (labels_.size() != parity_.size()) throw DimensionMismatch("one label per basis element required");
  for (std::size_t i = 0; i < parity_.size(); ++i) {
    (parity_[i] == Parity::Even ? even_ : odd_).push_back(i);
  }
  table_.resize(dim() * dim());
}

std::optional<std::size_t> LieSuperalgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Rational LieSuperalgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& t : structure(i, j)) {
    if (t.index == k) return t.coeff;
  }
  return 0;
}

void LieSuperalgebra::set_structure_constant(std::size_t i, std::size_t j, std::size_t k,
                                             const Rational& c) {
  if (i >= dim() || j >= dim() || k >= dim()) throw DimensionMismatch("structure constant index out of range");
  SparseVector& row = table_[i * dim() + j];
  auto it = std::lower_bound(row.begin(), row.end(), k,
                             [](const Term& t, std::size_t idx) { return t.index < idx; });
  if (it != row.end() && it->index == k) {
    if (c.is_zero()) {
      row.erase(it);
    } else {
      it->coeff = c;
    }
  } else if (!c.is_zero()) {
    row.insert(it, Term{k, c});
  }
}

void LieSuperalgebra::set_bracket_pair(std::size_t i, std::size_t j, const RatVector& v) {
  if (v.size() != dim()) throw DimensionMismatch("set_bracket_pair: element length");
  const Rational s = -Rational(koszul_sign(parity(i), parity(j)));
  for (std::size_t k = 0; k < dim(); ++k) {
    set_structure_constant(i, j, k, v[k]);
    if (i != j) set_structure_constant(j, i, k, v[k] * s);
  }
}

RatVector LieSuperalgebra::basis_bracket(std::size_t i, std::size_t j) const {
  RatVector v(dim());
  for (const auto& t : structure(i, j)) v[t.index] = t.coeff;
  return v;
}

std::string ValidationReport::summary(std::size_t max_items) const {
  if (ok()) return "valid";
  std::ostringstream os;
  os << violations.size() << " violation(s)";
  for (std::size_t n = 0; n < std::min(max_items, violations.size()); ++n) {
    os << "\n  " << violations[n].detail;
  }
  return os.str();
}

namespace {

// [e_i, v] for a dense element v.
RatVector bracket_basis_with(const LieSuperalgebra& g, std::size_t i, const RatVector& v) {
  RatVector out(g.dim());
  for (std::size_t m = 0; m < g.dim(); ++m) {
    if (v[m].is_zero()) continue;
    for (const auto& t : g.structure(i, m)) out[t.index] += v[m] * t.coeff;
  }
  return out;
}

// [v, e_j] for a dense element v.
RatVector bracket_with_basis(const LieSuperalgebra& g, const RatVector& v, std::size_t j) {
  RatVector out(g.dim());
  for (std::size_t m = 0; m < g.dim(); ++m) {
    if (v[m].is_zero()) continue;
    for (const auto& t : g.structure(m, j)) out[t.index] += v[m] * t.coeff;
  }
  return out;
}

std::string triple_name(const LieSuperalgebra& g, std::size_t i, std::size_t j, std::size_t k) {
  return "(" + g.label(i) + ", " + g.label(j) + ", " + g.label(k) + ")";
}

}  // namespace

ValidationReport validate(const LieSuperalgebra& g) {
  ValidationReport report;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : g.structure(i, j)) {
        if (g.parity(t.index) != g.parity(i) + g.parity(j)) {
          report.violations.push_back({Violation::Kind::Parity, i, j, t.index,
                                       "parity: [" + g.label(i) + ", " + g.label(j) +
                                           "] has a component on " + g.label(t.index)});
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      RatVector s = g.basis_bracket(i, j);
      add_scaled(s, Rational(koszul_sign(g.parity(i), g.parity(j))), g.basis_bracket(j, i));
      for (std::size_t k = 0; k < n; ++k) {
        if (!s[k].is_zero()) {
          report.violations.push_back({Violation::Kind::Antisymmetry, i, j, k,
                                       "antisymmetry: [" + g.label(i) + ", " + g.label(j) +
                                           "] on " + g.label(k)});
        }
      }
    }
  }
  // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const RatVector xy = g.basis_bracket(i, j);
      const Rational s(koszul_sign(g.parity(i), g.parity(j)));
      for (std::size_t k = 0; k < n; ++k) {
        RatVector lhs = bracket_basis_with(g, i, g.basis_bracket(j, k));
        add_scaled(lhs, -1, bracket_with_basis(g, xy, k));
        add_scaled(lhs, -s, bracket_basis_with(g, j, g.basis_bracket(i, k)));
        if (!is_zero(lhs)) {
          report.violations.push_back(
              {Violation::Kind::Jacobi, i, j, k, "Jacobi: triple " + triple_name(g, i, j, k)});
        }
      }
    }
  }
  return report;
}

bool is_even_element(const LieSuperalgebra& g, const RatVector& x) {
  if (x.size() != g.dim()) throw DimensionMismatch("element length mismatch");
  for (auto i : g.odd_indices())
    if (!x[i].is_zero()) return false;
  return true;
}

bool is_odd_element(const LieSuperalgebra& g, const RatVector& x) {
  if (x.size() != g.dim()) throw DimensionMismatch("element length mismatch");
  for (auto i : g.even_indices())
    if (!x[i].is_zero()) return false;
  return true;
}

RatVector even_part(const LieSuperalgebra& g, const RatVector& x) {
  RatVector out = x;
  for (auto i : g.odd_indices()) out[i] = 0;
  return out;
}

RatVector odd_part(const LieSuperalgebra& g, const RatVector& x) {
  RatVector out = x;
  for (auto i : g.even_indices()) out[i] = 0;
  return out;
}

RatVector bracket(const LieSuperalgebra& g, const RatVector& x, const RatVector& y) {
  if (x.size() != g.dim() || y.size() != g.dim()) throw DimensionMismatch("bracket: element length mismatch");
  RatVector out(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (y[j].is_zero()) continue;
      const Rational c = x[i] * y[j];
      for (const auto& t : g.structure(i, j)) out[t.index] += c * t.coeff;
    }
  }
  return out;
}

RatVector odd_square(const LieSuperalgebra& g, const RatVector& u) {
  if (!is_odd_element(g, u)) throw NotOdd("odd_square: element is not purely odd");
  return scaled(bracket(g, u, u), Rational(1, 2));
}

RatMatrix ad_matrix(const LieSuperalgebra& g, const RatVector& x) {
  RatMatrix m(g.dim(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.dim(); ++j) {
      for (const auto& t : g.structure(i, j)) m(t.index, j) += x[i] * t.coeff;
    }
  }
  return m;
}

SuperModule adjoint_module(const LieSuperalgebra& g) {
  SuperModule m;
  m.parity = g.parities();
  for (std::size_t i = 0; i < g.dim(); ++i) m.action.push_back(ad_matrix(g, g.basis_vector(i)));
  return m;
}

bool is_semisimple_element(const LieSuperalgebra& g, const RatVector& x) {
  if (!is_even_element(g, x)) throw NotEven("is_semisimple_element: element is not even");
  if (!g.faithful_rep()) throw MissingFaithfulRep(g.name() + ": no designated faithful representation");
  const RatMatrix m = g.faithful_rep()->act(x);
  if (m.rows() == 0) return true;
  return is_squarefree(minimal_polynomial(m));
}

bool in_g1ss(const LieSuperalgebra& g, const RatVector& u) {
  return is_semisimple_element(g, odd_square(g, u));
}

std::vector<RatVector> center(const LieSuperalgebra& g) {
  const std::size_t n = g.dim();
  if (n == 0) return {};
  // Rows indexed by (i, k): sum_m x_m c[m][i][k] = 0.
  RatMatrix sys(n * n, n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& t : g.structure(m, i)) sys(i * n + t.index, m) += t.coeff;
  return kernel_basis(sys);
}

std::vector<RatVector> even_centralizer(const LieSuperalgebra& g, const std::vector<RatVector>& xs) {
  const auto& ev = g.even_indices();
  const std::size_t n = g.dim();
  if (ev.empty()) return {};
  RatMatrix sys(xs.size() * n, ev.size());
  for (std::size_t a = 0; a < ev.size(); ++a) {
    for (std::size_t s = 0; s < xs.size(); ++s) {
      const RatVector b = bracket(g, g.basis_vector(ev[a]), xs[s]);
      for (std::size_t k = 0; k < n; ++k) sys(s * n + k, a) = b[k];
    }
  }
  std::vector<RatVector> out;
  for (const auto& kv : kernel_basis(sys)) {
    RatVector x(n);
    for (std::size_t a = 0; a < ev.size(); ++a) x[ev[a]] = kv[a];
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<RatVector> bracket_span(const LieSuperalgebra& g, const std::vector<RatVector>& a,
                                    const std::vector<RatVector>& b) {
  EchelonSpan s(g.dim());
  for (const auto& x : a)
    for (const auto& y : b) s.insert(bracket(g, x, y));
  return s.basis();
}

bool is_ideal(const LieSuperalgebra& g, const std::vector<RatVector>& subspace) {
  EchelonSpan s(g.dim());
  for (const auto& v : subspace) s.insert(v);
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (const auto& v : subspace) {
      if (!s.contains(bracket(g, g.basis_vector(i), v))) return false;
    }
  }
  return true;
}

bool is_reductive_even_part(const LieSuperalgebra& g) {
  if (!g.faithful_rep()) throw MissingFaithfulRep(g.name() + ": no designated faithful representation");
  const auto& ev = g.even_indices();
  if (ev.empty()) return true;
  const auto& rep = *g.faithful_rep();
  std::vector<RatVector> even_basis;
  for (auto i : ev) even_basis.push_back(g.basis_vector(i));
  const auto derived = bracket_span(g, even_basis, even_basis);
  // Trace-form orthogonal of [g0, g0] inside g0.
  std::vector<RatMatrix> rho_derived;
  for (const auto& d : derived) rho_derived.push_back(rep.act(d));
  RatMatrix sys(derived.size(), ev.size());
  for (std::size_t a = 0; a < ev.size(); ++a) {
    const RatMatrix& ra = rep.action[ev[a]];
    for (std::size_t r = 0; r < derived.size(); ++r) sys(r, a) = (ra * rho_derived[r]).trace();
  }
  std::vector<RatVector> radical;
  if (derived.empty()) {
    radical = even_basis;
  } else {
    for (const auto& kv : kernel_basis(sys)) {
      RatVector x(g.dim());
      for (std::size_t a = 0; a < ev.size(); ++a) x[ev[a]] = kv[a];
      radical.push_back(std::move(x));
    }
  }
  const auto even_center = even_centralizer(g, even_basis);
  return same_span(radical, even_center, g.dim());
}

bool even_acts_semisimply_on_odd(const LieSuperalgebra& g) {
  const auto& od = g.odd_indices();
  if (od.empty()) return true;
  auto restrict_odd = [&](const RatMatrix& ad) {
    RatMatrix m(od.size(), od.size());
    for (std::size_t r = 0; r < od.size(); ++r)
      for (std::size_t c = 0; c < od.size(); ++c) m(r, c) = ad(od[r], od[c]);
    return m;
  };
  std::vector<RatMatrix> gens;
  for (auto i : g.even_indices()) gens.push_back(restrict_odd(ad_matrix(g, g.basis_vector(i))));
  std::vector<RatMatrix> diag;
  for (const auto& t : g.cartan()) diag.push_back(restrict_odd(ad_matrix(g, t)));
  const auto weights = diagonal_weights(diag, od.size());
  return acting_algebra(gens, od.size(), weights).semisimple();
}

bool is_quasireductive(const LieSuperalgebra& g) {
  return is_reductive_even_part(g) && even_acts_semisimply_on_odd(g);
}

std::vector<std::size_t> lie_generating_subset(const LieSuperalgebra& g) {
  const std::size_t n = g.dim();
  std::vector<std::size_t> gens;
  EchelonSpan closure(n);
  auto close = [&]() {
    std::deque<RatVector> queue(closure.basis().begin(), closure.basis().end());
    while (!queue.empty()) {
      RatVector v = std::move(queue.front());
      queue.pop_front();
      for (auto s : gens) {
        RatVector b = bracket_basis_with(g, s, v);
        if (closure.insert(b)) queue.push_back(std::move(b));
      }
    }
  };
  std::vector<std::size_t> order = g.odd_indices();
  order.insert(order.end(), g.even_indices().begin(), g.even_indices().end());
  for (auto i : order) {
    if (closure.rank() == n) break;
    if (closure.contains(g.basis_vector(i))) continue;
    gens.push_back(i);
    closure.insert(g.basis_vector(i));
    close();
  }
  return gens;
}

LieSuperalgebra restrict_to_subalgebra(const LieSuperalgebra& g, const std::vector<RatVector>& basis,
                                       const std::string& name) {
  std::vector<std::string> labels;
  std::vector<Parity> parity;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const RatVector& v = basis[b];
    if (is_even_element(g, v)) {
      parity.push_back(Parity::Even);
    } else if (is_odd_element(g, v)) {
      parity.push_back(Parity::Odd);
    } else {
      throw InvalidArgument("restrict_to_subalgebra: basis vector is not homogeneous");
    }
    std::optional<std::size_t> unit;
    std::size_t nonzero = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!v[k].is_zero()) {
        ++nonzero;
        unit = k;
      }
    }
    if (nonzero == 1 && v[*unit].is_one()) {
      labels.push_back(g.label(*unit));
    } else {
      labels.push_back("y" + std::to_string(b + 1));
    }
  }
  LieSuperalgebra sub(name, labels, parity);
  const RatMatrix cols = RatMatrix::from_columns(basis, g.dim());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto coords = solve_linear(cols, bracket(g, basis[i], basis[j]));
      if (!coords) throw InvalidArgument("restrict_to_subalgebra: subspace is not closed under the bracket");
      for (std::size_t k = 0; k < basis.size(); ++k) sub.set_structure_constant(i, j, k, (*coords)[k]);
    }
  }
  if (g.faithful_rep()) {
    SuperModule rep;
    rep.parity = g.faithful_rep()->parity;
    for (const auto& v : basis) rep.action.push_back(g.faithful_rep()->act(v));
    sub.set_faithful_rep(std::move(rep));
  }
  return sub;
}

namespace {

// Coordinates of ad(x) restricted to an invariant subspace with the given basis.
RatMatrix restricted_ad(const LieSuperalgebra& g, const RatVector& x, const std::vector<RatVector>& basis,
                        bool unit_basis) {
  const std::size_t m = basis.size();
  RatMatrix out(m, m);
  const RatMatrix cols = unit_basis ? RatMatrix() : RatMatrix::from_columns(basis, g.dim());
  for (std::size_t b = 0; b < m; ++b) {
    const RatVector img = bracket(g, x, basis[b]);
    if (unit_basis) {
      for (std::size_t a = 0; a < m; ++a) out(a, b) = img[a];
    } else {
      const auto c = solve_linear(cols, img);
      if (!c) throw NotSemisimpleStructure("subspace is not ad-invariant");
      for (std::size_t a = 0; a < m; ++a) out(a, b) = (*c)[a];
    }
  }
  return out;
}

}  // namespace

Decomposition direct_sum_decompose(const LieSuperalgebra& g) {
  const std::size_t n = g.dim();
  Decomposition out;
  out.center = center(g);
  std::vector<RatVector> all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(g.basis_vector(i));
  const auto derived = bracket_span(g, all, all);
  if (!intersect_spans(out.center, derived, n).empty() || out.center.size() + derived.size() != n) {
    throw NotSemisimpleStructure(g.name() + ": center and derived algebra do not split g");
  }
  if (derived.empty()) return out;

  const bool unit_basis = derived.size() == n;
  const std::vector<RatVector> dbasis = unit_basis ? all : derived;
  const std::size_t m = dbasis.size();
  std::vector<Parity> dpar;
  for (const auto& v : dbasis) dpar.push_back(is_even_element(g, v) ? Parity::Even : Parity::Odd);

  // Weight labels restrict the unknowns of the commutant when the Cartan acts
  // diagonally on the chosen basis.
  std::vector<RatMatrix> cartan_ad;
  for (const auto& t : g.cartan()) cartan_ad.push_back(restricted_ad(g, t, dbasis, unit_basis));
  const auto weights = diagonal_weights(cartan_ad, m);

  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (dpar[a] == dpar[b] && (weights.empty() || weights[a] == weights[b])) unknowns.emplace_back(a, b);

  std::vector<RatMatrix> gens;
  for (auto i : lie_generating_subset(g)) gens.push_back(restricted_ad(g, g.basis_vector(i), dbasis, unit_basis));

  // Phi A - A Phi = 0 for every generator A.
  EchelonSpan rows(unknowns.size());
  for (const auto& A : gens) {
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) {
        RatVector eq(unknowns.size());
        bool any = false;
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
          const auto [a, b] = unknowns[u];
          Rational v;
          if (a == r) v += A(b, c);
          if (b == c) v -= A(r, a);
          if (!v.is_zero()) {
            eq[u] = v;
            any = true;
          }
        }
        if (any) rows.insert(eq);
      }
    }
  }
  RatMatrix sys = RatMatrix::from_rows(rows.basis(), unknowns.size());
  std::vector<RatVector> commutant_coords =
      rows.rank() == 0 ? std::vector<RatVector>() : kernel_basis(sys);
  if (rows.rank() == 0) {
    for (std::size_t u = 0; u < unknowns.size(); ++u) commutant_coords.push_back(unit_vector(unknowns.size(), u));
  }
  std::vector<RatMatrix> commutant;
  for (const auto& cc : commutant_coords) {
    RatMatrix phi(m, m);
    for (std::size_t u = 0; u < unknowns.size(); ++u) phi(unknowns[u].first, unknowns[u].second) = cc[u];
    commutant.push_back(std::move(phi));
  }

  // Simultaneous eigenspaces of the commutant, in D-coordinates.
  std::vector<std::vector<RatVector>> pieces;
  {
    std::vector<RatVector> whole;
    for (std::size_t a = 0; a < m; ++a) whole.push_back(unit_vector(m, a));
    pieces.push_back(std::move(whole));
  }
  for (const auto& phi : commutant) {
    std::vector<std::vector<RatVector>> next;
    for (const auto& piece : pieces) {
      const RatMatrix cols = RatMatrix::from_columns(piece, m);
      RatMatrix local(piece.size(), piece.size());
      for (std::size_t b = 0; b < piece.size(); ++b) {
        const auto c = solve_linear(cols, phi.apply(piece[b]));
        if (!c) throw NotSemisimpleStructure(g.name() + ": adjoint commutant is not commutative");
        for (std::size_t a = 0; a < piece.size(); ++a) local(a, b) = (*c)[a];
      }
      if (!is_rationally_diagonalizable(local)) {
        throw NotSemisimpleStructure(g.name() + ": adjoint commutant has a non-split element");
      }
      for (const auto& es : rational_eigenspaces(local)) {
        std::vector<RatVector> sub;
        for (const auto& v : es.basis) sub.push_back(cols.apply(v));
        next.push_back(std::move(sub));
      }
    }
    pieces = std::move(next);
  }
  if (pieces.size() != commutant.size()) {
    throw NotSemisimpleStructure(g.name() + ": an indecomposable summand has non-scalar endomorphisms");
  }
  for (const auto& piece : pieces) {
    std::vector<RatVector> ideal;
    for (const auto& v : piece) {
      RatVector x(n);
      for (std::size_t a = 0; a < m; ++a) add_scaled(x, v[a], dbasis[a]);
      ideal.push_back(std::move(x));
    }
    ideal = span_basis(ideal, n);
    if (!is_ideal(g, ideal) || !same_span(bracket_span(g, ideal, ideal), ideal, n)) {
      throw NotSemisimpleStructure(g.name() + ": summand is not a perfect ideal");
    }
    out.ideals.push_back(std::move(ideal));
  }
  // Deterministic order: by first pivot.
  std::sort(out.ideals.begin(), out.ideals.end(), [](const auto& a, const auto& b) {
    auto first = [](const RatVector& v) {
      std::size_t i = 0;
      while (i < v.size() && v[i].is_zero()) ++i;
      return i;
    };
    return first(a.front()) < first(b.front());
  });
  return out;
}

std::string format_element(const LieSuperalgebra& g, const RatVector& x) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    const Rational mag = abs(x[i]);
    if (first) {
      if (x[i].sign() < 0) os << '-';
    } else {
      os << (x[i].sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (!mag.is_one()) os << mag << '*';
    os << g.label(i);
  }
  return first ? "0" : os.str();
}

}  // namespace superkit
