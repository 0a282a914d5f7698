#include "superkit/supercomm.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "superkit/errors.hpp"
#include "superkit/families.hpp"
#include "superkit/reps.hpp"

namespace superkit {

SupercommAlgebra::SupercommAlgebra(std::string name, std::vector<std::string> labels, std::vector<Parity> parity)
    : name_(std::move(name)), labels_(std::move(labels)), parity_(std::move(parity)) {
  if (labels_.size() != parity_.size()) throw DimensionMismatch("one label per basis element required");
  table_.resize(dim() * dim());
  unit_ = RatVector(dim());
}

std::optional<std::size_t> SupercommAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

void SupercommAlgebra::set_product(std::size_t i, std::size_t j, const RatVector& v) {
  if (i >= dim() || j >= dim() || v.size() != dim()) throw DimensionMismatch("set_product: index or length");
  SparseVector row;
  for (std::size_t k = 0; k < dim(); ++k)
    if (!v[k].is_zero()) row.push_back(Term{k, v[k]});
  table_[i * dim() + j] = std::move(row);
}

RatVector SupercommAlgebra::multiply(const RatVector& a, const RatVector& b) const {
  if (a.size() != dim() || b.size() != dim()) throw DimensionMismatch("multiply: element length");
  RatVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      const Rational c = a[i] * b[j];
      for (const auto& t : product(i, j)) out[t.index] += c * t.coeff;
    }
  }
  return out;
}

bool SupercommAlgebra::is_homogeneous(const RatVector& a, Parity p) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero() && parity_[i] != p) return false;
  return true;
}

std::string SupercommReport::summary(std::size_t max_items) const {
  if (ok()) return "valid";
  std::ostringstream os;
  os << violations.size() << " violation(s)";
  for (std::size_t n = 0; n < std::min(max_items, violations.size()); ++n) os << "\n  " << violations[n].detail;
  return os.str();
}

SupercommReport validate_algebra(const SupercommAlgebra& a) {
  using K = SupercommViolation::Kind;
  SupercommReport r;
  const std::size_t n = a.dim();
  if (a.unit().size() != n) {
    r.violations.push_back({K::Shape, 0, 0, 0, "unit has wrong length"});
    return r;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : a.product(i, j)) {
        if (a.parity(t.index) != a.parity(i) + a.parity(j)) {
          r.violations.push_back({K::Parity, i, j, t.index,
                                  a.label(i) + "*" + a.label(j) + " has a component of the wrong parity"});
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const RatVector e = a.basis_vector(i);
    if (a.multiply(a.unit(), e) != e || a.multiply(e, a.unit()) != e) {
      r.violations.push_back({K::Unit, i, 0, 0, "unit law fails on " + a.label(i)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const RatVector ij = a.multiply(a.basis_vector(i), a.basis_vector(j));
      const RatVector ji = a.multiply(a.basis_vector(j), a.basis_vector(i));
      if (ij != scaled(ji, koszul_sign(a.parity(i), a.parity(j)))) {
        r.violations.push_back({K::Supercommutativity, i, j, 0,
                                a.label(i) + "*" + a.label(j) + " is not supercommutative"});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const RatVector ij = a.multiply(a.basis_vector(i), a.basis_vector(j));
      for (std::size_t k = 0; k < n; ++k) {
        const RatVector lhs = a.multiply(ij, a.basis_vector(k));
        const RatVector rhs = a.multiply(a.basis_vector(i), a.multiply(a.basis_vector(j), a.basis_vector(k)));
        if (lhs != rhs) {
          r.violations.push_back({K::Associativity, i, j, k,
                                  "(" + a.label(i) + "*" + a.label(j) + ")*" + a.label(k) + " is not associative"});
        }
      }
    }
  }
  return r;
}

SupercommReport validate_derivation(const SupercommAlgebra& a, const OddDerivation& u) {
  using K = SupercommViolation::Kind;
  SupercommReport r;
  const std::size_t n = a.dim();
  if (u.matrix.rows() != n || u.matrix.cols() != n) {
    r.violations.push_back({K::Shape, 0, 0, 0, "derivation matrix has wrong shape"});
    return r;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!a.is_homogeneous(u.matrix.column(j), a.parity(j) + Parity::Odd)) {
      r.violations.push_back({K::Parity, j, 0, 0, "u(" + a.label(j) + ") does not have the opposite parity"});
    }
  }
  std::vector<RatVector> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(u.matrix.column(j));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const RatVector ei = a.basis_vector(i), ej = a.basis_vector(j);
      const RatVector lhs = u.apply(a.multiply(ei, ej));
      RatVector rhs = a.multiply(images[i], ej);
      add_scaled(rhs, a.parity(i) == Parity::Odd ? -1 : 1, a.multiply(ei, images[j]));
      if (lhs != rhs) {
        r.violations.push_back({K::Leibniz, i, j, 0, "Leibniz rule fails on (" + a.label(i) + ", " + a.label(j) + ")"});
      }
    }
  }
  return r;
}

namespace {

std::vector<RatVector> ideal_of_image(const SupercommAlgebra& a, const OddDerivation& u) {
  std::vector<RatVector> span;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const RatVector img = u.matrix.column(j);
    if (is_zero(img)) continue;
    for (std::size_t i = 0; i < a.dim(); ++i) span.push_back(a.multiply(a.basis_vector(i), img));
  }
  return span;
}

}  // namespace

bool is_nonvanishing(const SupercommAlgebra& a, const OddDerivation& u) {
  return in_span(ideal_of_image(a, u), a.unit());
}

SplittingResult splitting_witness(const SupercommAlgebra& a, const OddDerivation& u) {
  const std::size_t n = a.dim();
  if (!is_nonvanishing(a, u)) throw Vanishing(a.name() + ": the image of u generates a proper ideal");
  const RatMatrix h = u.matrix * u.matrix;
  if (h * u.matrix != u.matrix * h) throw InvalidArgument("u^2 does not commute with u");
  const RatPoly hpoly = minimal_polynomial(h);
  if (!splits_squarefree(hpoly)) throw NonSemisimpleSquare(a.name() + ": u^2 is not diagonalizable over Q");

  // 1 = sum c_ij e_i u(e_j) modulo the ideal J generated by odd elements, with
  // e_i even and e_j odd; p = sum c_ij e_i e_j is odd and u(p) - 1 lies in J.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<RatVector> columns;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.parity(i) != Parity::Even) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (a.parity(j) != Parity::Odd) continue;
      pairs.emplace_back(i, j);
      columns.push_back(a.multiply(a.basis_vector(i), u.matrix.column(j)));
    }
  }
  std::vector<RatVector> odd_ideal;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.parity(j) == Parity::Odd) odd_ideal.push_back(a.multiply(a.basis_vector(i), a.basis_vector(j)));
  odd_ideal = span_basis(odd_ideal, n);
  std::vector<RatVector> all = columns;
  all.insert(all.end(), odd_ideal.begin(), odd_ideal.end());
  const auto coeffs = solve_linear(RatMatrix::from_columns(all, n), a.unit());
  if (!coeffs) throw Vanishing(a.name() + ": 1 is not reached modulo the odd ideal");

  SplittingResult res;
  res.p = RatVector(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if ((*coeffs)[k].is_zero()) continue;
    add_scaled(res.p, (*coeffs)[k], a.multiply(a.basis_vector(pairs[k].first), a.basis_vector(pairs[k].second)));
  }
  res.eta = u.apply(res.p) - a.unit();
  RatVector power = res.eta;
  res.eta_nilpotency = 1;
  while (!is_zero(power)) {
    if (res.eta_nilpotency > n) throw InvalidArgument("u(p) - 1 is not nilpotent");
    power = a.multiply(power, res.eta);
    ++res.eta_nilpotency;
  }

  // Component of p in ker h: the spectral projector prod_{l != 0} (h - l) / (-l).
  res.h_spectrum = rational_roots(hpoly);
  RatMatrix proj = RatMatrix::identity(n);
  for (const auto& l : res.h_spectrum) {
    if (l.is_zero()) continue;
    RatMatrix factor = h - RatMatrix::identity(n) * l;
    proj = factor * proj * (Rational(-1) / l);
  }
  res.p0 = proj.apply(res.p);
  const RatVector alpha = u.apply(res.p0);
  const RatVector eta0 = alpha - a.unit();

  // alpha^{-1} = sum_k (-eta0)^k, finite since eta0 is nilpotent.
  RatVector inv = a.unit();
  RatVector term = a.unit();
  const RatVector neg = scaled(eta0, -1);
  for (std::size_t k = 0; k <= n; ++k) {
    term = a.multiply(term, neg);
    if (is_zero(term)) break;
    add_scaled(inv, 1, term);
  }
  if (a.multiply(alpha, inv) != a.unit()) throw InvalidArgument("u(p0) is not a unit");
  res.f = a.multiply(res.p0, inv);
  if (u.apply(res.f) != a.unit() || !a.is_homogeneous(res.f, Parity::Odd)) {
    throw InvalidArgument("constructed f does not satisfy u(f) = 1");
  }
  return res;
}

bool verify_no_splitting(const SupercommAlgebra& a, const OddDerivation& u) {
  return solve_linear(u.matrix, a.unit()).has_value();
}

namespace {

RatVector vec(std::initializer_list<int> xs) {
  RatVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

OddDerivation from_images(const std::vector<RatVector>& images) {
  return OddDerivation{RatMatrix::from_columns(images, images.size())};
}

// Basis 1, x, xi, x*xi with x^2 = s.
SupercommAlgebra x_tensor_xi(const std::string& name, int s) {
  SupercommAlgebra a(name, {"1", "x", "xi", "x*xi"}, {Parity::Even, Parity::Even, Parity::Odd, Parity::Odd});
  a.set_unit(vec({1, 0, 0, 0}));
  for (std::size_t i = 0; i < 4; ++i) {
    a.set_product(0, i, a.basis_vector(i));
    a.set_product(i, 0, a.basis_vector(i));
  }
  a.set_product(1, 1, vec({s, 0, 0, 0}));
  a.set_product(1, 2, vec({0, 0, 0, 1}));
  a.set_product(2, 1, vec({0, 0, 0, 1}));
  a.set_product(1, 3, vec({0, 0, s, 0}));
  a.set_product(3, 1, vec({0, 0, s, 0}));
  return a;
}

}  // namespace

SupercommPair exterior_d() {
  SupercommAlgebra a("exterior_1", {"1", "xi"}, {Parity::Even, Parity::Odd});
  a.set_unit(vec({1, 0}));
  a.set_product(0, 0, vec({1, 0}));
  a.set_product(0, 1, vec({0, 1}));
  a.set_product(1, 0, vec({0, 1}));
  return {"exterior_d", a, from_images({vec({0, 0}), vec({1, 0})}), true};
}

SupercommPair unit_circle_pair() {
  auto a = x_tensor_xi("circle_xi", 1);
  // u(1) = u(x) = 0, u(xi) = x, u(x xi) = x^2 = 1.
  return {"circle_x_dxi", a, from_images({vec({0, 0, 0, 0}), vec({0, 0, 0, 0}), vec({0, 1, 0, 0}), vec({1, 0, 0, 0})}),
          true};
}

SupercommPair vanishing_pair() {
  auto a = x_tensor_xi("dual_numbers_xi", 0);
  // u(xi) = x, u(x xi) = x^2 = 0.
  return {"dual_numbers_vanishing", a,
          from_images({vec({0, 0, 0, 0}), vec({0, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 0, 0})}), false};
}

SupercommPair coinvariant_dual_pair(const LieSuperalgebra& g, const RatVector& u) {
  if (!is_odd_element(g, u)) throw NotOdd("coinvariant_dual_pair: u must be odd");
  const auto& odd = g.odd_indices();
  const std::size_t m = odd.size();
  if (m > 12) throw InvalidArgument("coinvariant_dual_pair: odd part too large");
  const std::size_t n = std::size_t{1} << m;

  std::vector<std::string> labels;
  std::vector<Parity> parity;
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::string l;
    for (std::size_t b = 0; b < m; ++b) {
      if (!(mask >> b & 1)) continue;
      if (!l.empty()) l += "*";
      l += "xi_" + g.label(odd[b]);
    }
    labels.push_back(l.empty() ? "1" : l);
    parity.push_back(std::popcount(mask) % 2 == 0 ? Parity::Even : Parity::Odd);
  }
  SupercommAlgebra a("Lambda(" + g.name() + "_1*)", labels, parity);
  a.set_unit(unit_vector(n, 0));
  // Delta(x_S) = sum_T sgn(T, S - T) x_T (x) x_{S - T}; dualizing with the
  // Koszul rule gives xi_A xi_B = sgn(A, B) (-1)^{|A||B|} xi_{A + B}.
  for (std::size_t A = 0; A < n; ++A) {
    for (std::size_t B = 0; B < n; ++B) {
      RatVector v(n);
      if ((A & B) == 0) {
        int inversions = 0;
        for (std::size_t x = 0; x < m; ++x)
          if (A >> x & 1) inversions += std::popcount(B & ((std::size_t{1} << x) - 1));
        inversions += std::popcount(A) * std::popcount(B);
        v[A | B] = inversions % 2 == 0 ? 1 : -1;
      }
      a.set_product(A, B, v);
    }
  }
  const SuperModule coind = dual(g, induced_trivial(g));
  return {"coinvariant_dual_" + g.name(), a, OddDerivation{coind.act(u)}, true};
}

std::vector<SupercommPair> supercomm_catalog() {
  const auto gl11 = build_gl(1, 1);
  RatVector u(gl11.dim());
  u[*gl11.index_of("E12")] = 1;
  u[*gl11.index_of("E21")] = 1;
  return {exterior_d(), unit_circle_pair(), coinvariant_dual_pair(gl11, u), vanishing_pair()};
}

std::string format_element(const SupercommAlgebra& a, const RatVector& x) {
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
    if (a.label(i) == "1") {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << '*';
      os << a.label(i);
    }
  }
  return first ? "0" : os.str();
}

}  // namespace superkit
