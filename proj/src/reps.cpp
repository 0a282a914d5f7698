#include "superkit/reps.hpp"

#include <bit>
#include <sstream>

#include "superkit/assoc.hpp"
#include "superkit/enveloping.hpp"
#include "superkit/errors.hpp"

namespace superkit {

std::string ModuleReport::summary(std::size_t max_items) const {
  if (ok()) return "valid";
  std::ostringstream os;
  os << violations.size() << " violation(s)";
  for (std::size_t n = 0; n < std::min(max_items, violations.size()); ++n) os << "\n  " << violations[n].detail;
  return os.str();
}

ModuleReport validate_module(const LieSuperalgebra& g, const SuperModule& m) {
  ModuleReport report;
  const std::size_t n = m.dim();
  if (m.action.size() != g.dim()) {
    report.violations.push_back({ModuleViolation::Kind::Shape, 0, 0,
                                 "expected " + std::to_string(g.dim()) + " action matrices, got " +
                                     std::to_string(m.action.size())});
    return report;
  }
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (m.action[i].rows() != n || m.action[i].cols() != n) {
      report.violations.push_back({ModuleViolation::Kind::Shape, i, 0, "matrix of " + g.label(i) + " has wrong shape"});
    }
  }
  if (!report.ok()) return report;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (!has_parity(m.action[i], m.parity, g.parity(i))) {
      report.violations.push_back(
          {ModuleViolation::Kind::Parity, i, 0, "matrix of " + g.label(i) + " does not have parity " + to_string(g.parity(i))});
    }
  }
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i; j < g.dim(); ++j) {
      const RatMatrix lhs = m.act(g.basis_bracket(i, j));
      const RatMatrix rhs = commutator(m.action[i], m.action[j], koszul_sign(g.parity(i), g.parity(j)));
      if (lhs != rhs) {
        report.violations.push_back({ModuleViolation::Kind::Law, i, j,
                                     "rho([" + g.label(i) + ", " + g.label(j) + "]) differs from the supercommutator"});
      }
    }
  }
  return report;
}

SuperModule trivial_module(const LieSuperalgebra& g) {
  return SuperModule{{Parity::Even}, std::vector<RatMatrix>(g.dim(), RatMatrix(1, 1))};
}

SuperModule tensor(const LieSuperalgebra& g, const SuperModule& m, const SuperModule& n) {
  if (m.action.size() != g.dim() || n.action.size() != g.dim()) throw DimensionMismatch("tensor: module of another algebra");
  const std::size_t dm = m.dim(), dn = n.dim();
  SuperModule out;
  for (std::size_t a = 0; a < dm; ++a)
    for (std::size_t b = 0; b < dn; ++b) out.parity.push_back(m.parity[a] + n.parity[b]);
  for (std::size_t x = 0; x < g.dim(); ++x) {
    RatMatrix t(dm * dn, dm * dn);
    const RatMatrix& mx = m.action[x];
    const RatMatrix& nx = n.action[x];
    for (std::size_t a = 0; a < dm; ++a) {
      for (std::size_t b = 0; b < dn; ++b) {
        const std::size_t col = a * dn + b;
        for (std::size_t r = 0; r < dm; ++r)
          if (!mx(r, a).is_zero()) t(r * dn + b, col) += mx(r, a);
        const Rational s = koszul_sign(g.parity(x), m.parity[a]);
        for (std::size_t r = 0; r < dn; ++r)
          if (!nx(r, b).is_zero()) t(a * dn + r, col) += s * nx(r, b);
      }
    }
    out.action.push_back(std::move(t));
  }
  return out;
}

SuperModule dual(const LieSuperalgebra& g, const SuperModule& m) {
  if (m.action.size() != g.dim()) throw DimensionMismatch("dual: module of another algebra");
  SuperModule out{m.parity, {}};
  const std::size_t n = m.dim();
  for (std::size_t x = 0; x < g.dim(); ++x) {
    RatMatrix d(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) d(b, a) = -Rational(koszul_sign(g.parity(x), m.parity[a])) * m.action[x](a, b);
    out.action.push_back(std::move(d));
  }
  return out;
}

SuperModule direct_sum(const SuperModule& m, const SuperModule& n) {
  if (m.action.size() != n.action.size()) throw DimensionMismatch("direct_sum: modules of different algebras");
  SuperModule out;
  out.parity = m.parity;
  out.parity.insert(out.parity.end(), n.parity.begin(), n.parity.end());
  const std::size_t dm = m.dim(), d = m.dim() + n.dim();
  for (std::size_t x = 0; x < m.action.size(); ++x) {
    RatMatrix s(d, d);
    for (std::size_t r = 0; r < dm; ++r)
      for (std::size_t c = 0; c < dm; ++c) s(r, c) = m.action[x](r, c);
    for (std::size_t r = 0; r < n.dim(); ++r)
      for (std::size_t c = 0; c < n.dim(); ++c) s(dm + r, dm + c) = n.action[x](r, c);
    out.action.push_back(std::move(s));
  }
  return out;
}

SuperModule induced_trivial(const LieSuperalgebra& g) {
  SuperModule out;
  out.action = coinvariant_action(g, Side::Left);
  const std::size_t n = coinvariant_dim(g);
  for (std::size_t mask = 0; mask < n; ++mask) {
    out.parity.push_back(std::popcount(mask) % 2 == 0 ? Parity::Even : Parity::Odd);
  }
  return out;
}

bool is_module_semisimple(const LieSuperalgebra& g, const SuperModule& m) {
  if (m.dim() == 0) return true;
  std::vector<RatMatrix> cartan;
  for (const auto& t : g.cartan()) cartan.push_back(m.act(t));
  const auto weights = diagonal_weights(cartan, m.dim());
  // The image of U(g) is generated by the images of Lie generators.
  std::vector<RatMatrix> gens;
  for (auto i : lie_generating_subset(g)) gens.push_back(m.action.at(i));
  return acting_algebra(gens, m.dim(), weights).semisimple();
}

bool is_integrable(const LieSuperalgebra& g, const SuperModule& m) {
  for (const auto& t : g.cartan()) {
    const RatMatrix rt = m.act(t);
    const RatPoly p = minimal_polynomial(rt);
    if (!splits_squarefree(p)) return false;
    for (const auto& root : rational_roots(p))
      if (!root.is_integer()) return false;
  }
  return true;
}

namespace {

// Kernel of a matrix restricted to the vectors of one parity.
std::vector<RatVector> kernel_in_parity(const RatMatrix& a, const std::vector<Parity>& parity, Parity p) {
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < parity.size(); ++i)
    if (parity[i] == p) cols.push_back(i);
  RatMatrix sub(a.rows(), cols.size());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) sub(r, c) = a(r, cols[c]);
  std::vector<RatVector> out;
  for (const auto& k : kernel_basis(sub)) {
    RatVector v(parity.size());
    for (std::size_t c = 0; c < cols.size(); ++c) v[cols[c]] = k[c];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

DSResult ds_functor(const LieSuperalgebra& g, const RatVector& u, const SuperModule& m) {
  if (!is_odd_element(g, u)) throw NotOdd("ds_functor: u must be odd");
  if (!in_g1ss(g, u)) throw NotInG1ss("ds_functor: u^2 is not semisimple");
  if (m.action.size() != g.dim()) throw DimensionMismatch("ds_functor: module of another algebra");
  const RatMatrix rho_u = m.act(u);
  const RatMatrix rho_h = m.act(odd_square(g, u));

  DSResult r;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const auto fixed = kernel_in_parity(rho_h, m.parity, p);
    r.fixed_dim += fixed.size();
    // cycles: v in fixed with u v = 0; boundaries: u applied to fixed vectors of the other parity
    std::vector<RatVector> cycles;
    if (!fixed.empty()) {
      const RatMatrix basis = RatMatrix::from_columns(fixed, m.dim());
      for (const auto& c : kernel_basis(rho_u * basis)) cycles.push_back(basis.apply(c));
    }
    EchelonSpan span(m.dim());
    for (const auto& w : kernel_in_parity(rho_h, m.parity, p + Parity::Odd)) span.insert(rho_u.apply(w));
    std::size_t count = 0;
    for (const auto& c : cycles) {
      if (span.insert(c)) {
        r.homology_basis.push_back(c);
        ++count;
      }
    }
    (p == Parity::Even ? r.even_dim : r.odd_dim) = count;
  }
  return r;
}

DSTensorReport ds_tensor_check(const LieSuperalgebra& g, const RatVector& u, const SuperModule& m,
                               const SuperModule& n) {
  DSTensorReport r;
  r.m = ds_functor(g, u, m);
  r.n = ds_functor(g, u, n);
  r.product = ds_functor(g, u, tensor(g, m, n));
  r.expected_even = r.m.even_dim * r.n.even_dim + r.m.odd_dim * r.n.odd_dim;
  r.expected_odd = r.m.even_dim * r.n.odd_dim + r.m.odd_dim * r.n.even_dim;
  return r;
}

}  // namespace superkit
