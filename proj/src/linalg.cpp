#include "superkit/linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "superkit/errors.hpp"

namespace superkit {

// ---------------------------------------------------------------- vectors

RatVector zero_vector(std::size_t n) { return RatVector(n); }

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

void add_scaled(RatVector& a, const Rational& s, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("add_scaled: length mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) a[i] += s * b[i];
  }
}

RatVector scaled(const RatVector& v, const Rational& s) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  RatVector out = a;
  add_scaled(out, 1, b);
  return out;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  RatVector out = a;
  add_scaled(out, -1, b);
  return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

RatVector primitive_integral(const RatVector& v) {
  mpz_class den = 1;
  for (const auto& r : v) {
    mpz_class d = r.denominator();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  mpz_class g = 0;
  for (const auto& r : v) {
    mpz_class n = r.numerator() * (den / r.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) return v;
  Rational scale(den, g);
  for (const auto& r : v) {
    if (!r.is_zero()) {
      if (r.sign() < 0) scale = -scale;
      break;
    }
  }
  return scaled(v, scale);
}

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------- matrices

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& columns, std::size_t rows) {
  RatMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("from_columns: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RatMatrix RatMatrix::diagonal(const RatVector& d) {
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool RatMatrix::is_zero() const { return superkit::is_zero(data_); }

Rational RatMatrix::trace() const {
  Rational t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("apply: length mismatch");
  RatVector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix +: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix -: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix *: shape mismatch");
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b, int sign) {
  RatMatrix out = a * b;
  RatMatrix ba = b * a;
  if (sign > 0) {
    out -= ba;
  } else {
    out += ba;
  }
  return out;
}

std::string to_string(const RatMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << "]\n";
  }
  return os.str();
}

// ---------------------------------------------------------------- elimination

RowEchelon row_reduce(RatMatrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
    }
    const Rational inv = Rational(1) / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!m(lead_row, j).is_zero()) m(lead_row, j) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      const Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(lead_row, j).is_zero()) m(r, j) -= f * m(lead_row, j);
      }
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RatMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      v[e.pivots[r]] = -e.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve_linear: rhs length mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RowEchelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse: matrix not square");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RowEchelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

// ---------------------------------------------------------------- spans

RatVector EchelonSpan::reduce(RatVector v) const {
  if (v.size() != dim_) throw DimensionMismatch("EchelonSpan: length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (!f.is_zero()) add_scaled(v, -f, rows_[i]);
  }
  return v;
}

bool EchelonSpan::insert(const RatVector& v) {
  RatVector r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Rational inv = Rational(1) / r[p];
  for (auto& x : r) {
    if (!x.is_zero()) x *= inv;
  }
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (!f.is_zero()) add_scaled(row, -f, r);
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

std::vector<RatVector> span_basis(const std::vector<RatVector>& vectors, std::size_t dim) {
  EchelonSpan s(dim);
  for (const auto& v : vectors) s.insert(v);
  return s.basis();
}

std::size_t span_rank(const std::vector<RatVector>& vectors, std::size_t dim) {
  return span_basis(vectors, dim).size();
}

bool in_span(const std::vector<RatVector>& vectors, const RatVector& v) {
  EchelonSpan s(v.size());
  for (const auto& w : vectors) s.insert(w);
  return s.contains(v);
}

std::optional<RatVector> coordinates_in(const std::vector<RatVector>& basis, const RatVector& v) {
  if (basis.empty()) {
    if (is_zero(v)) return RatVector{};
    return std::nullopt;
  }
  return solve_linear(RatMatrix::from_columns(basis, v.size()), v);
}

std::vector<RatVector> intersect_spans(const std::vector<RatVector>& a,
                                       const std::vector<RatVector>& b, std::size_t dim) {
  const auto ba = span_basis(a, dim);
  const auto bb = span_basis(b, dim);
  if (ba.empty() || bb.empty()) return {};
  // Solve sum x_i a_i - sum y_j b_j = 0.
  std::vector<RatVector> cols = ba;
  for (const auto& v : bb) cols.push_back(scaled(v, -1));
  const auto ker = kernel_basis(RatMatrix::from_columns(cols, dim));
  std::vector<RatVector> out;
  for (const auto& k : ker) {
    RatVector w(dim);
    for (std::size_t i = 0; i < ba.size(); ++i) add_scaled(w, k[i], ba[i]);
    out.push_back(std::move(w));
  }
  return span_basis(out, dim);
}

bool same_span(const std::vector<RatVector>& a, const std::vector<RatVector>& b, std::size_t dim) {
  EchelonSpan s(dim);
  for (const auto& v : a) s.insert(v);
  const std::size_t ra = s.rank();
  for (const auto& v : b) {
    if (!s.contains(v)) return false;
  }
  return span_rank(b, dim) == ra;
}

// ---------------------------------------------------------------- polynomials

RatPoly::RatPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }
RatPoly RatPoly::x() { return RatPoly({0, 1}); }
RatPoly RatPoly::linear(const Rational& root) { return RatPoly({-root, 1}); }

void RatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatPoly RatPoly::monic() const {
  if (c_.empty()) return *this;
  const Rational inv = Rational(1) / c_.back();
  std::vector<Rational> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * inv;
  return RatPoly(std::move(out));
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rational> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return RatPoly(std::move(out));
}

Rational RatPoly::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatMatrix RatPoly::evaluate(const RatMatrix& m) const {
  if (!m.is_square()) throw DimensionMismatch("polynomial evaluation needs a square matrix");
  RatMatrix acc(m.rows(), m.cols());
  const RatMatrix id = RatMatrix::identity(m.rows());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * m;
    acc += id * *it;
  }
  return acc;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return RatPoly(std::move(out));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(out));
}

std::string RatPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& a = c_[k];
    if (a.is_zero()) continue;
    Rational mag = abs(a);
    if (first) {
      if (a.sign() < 0) os << '-';
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || !mag.is_one()) {
      os << mag;
      if (k > 0) os << '*';
    }
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

PolyDivision divide(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RatPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lead_inv = Rational(1) / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + db)] * lead_inv;
    quo[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * bc[static_cast<std::size_t>(j)];
    }
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divide(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RatPoly lcm(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  return divide(a * b, gcd(a, b)).quotient.monic();
}

RatPoly minimal_polynomial(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("minimal_polynomial: matrix not square");
  const std::size_t n = m.rows();
  RatPoly result = RatPoly::constant(1);
  EchelonSpan covered(n);  // sum of the cyclic subspaces already accounted for
  for (std::size_t j = 0; j < n; ++j) {
    RatVector v = unit_vector(n, j);
    if (covered.contains(v)) continue;
    // Krylov sequence v, mv, m^2 v, ... with coefficient tracking: each stored
    // reduced vector r_i equals sum_k hist_i[k] m^k v.
    std::vector<RatVector> reduced;
    std::vector<std::size_t> pivot;
    std::vector<std::vector<Rational>> hist;
    RatVector w = v;
    for (std::size_t k = 0;; ++k) {
      RatVector r = w;
      std::vector<Rational> h(k + 1);
      h[k] = 1;
      for (std::size_t i = 0; i < reduced.size(); ++i) {
        const Rational f = r[pivot[i]];
        if (f.is_zero()) continue;
        add_scaled(r, -f, reduced[i]);
        for (std::size_t t = 0; t < hist[i].size(); ++t) h[t] -= f * hist[i][t];
      }
      std::size_t p = 0;
      while (p < n && r[p].is_zero()) ++p;
      if (p == n) {
        // m^k v lies in the span: h encodes the local minimal polynomial.
        result = lcm(result, RatPoly(std::move(h)));
        break;
      }
      const Rational inv = Rational(1) / r[p];
      for (auto& x : r) x *= inv;
      for (auto& x : h) x *= inv;
      reduced.push_back(std::move(r));
      pivot.push_back(p);
      hist.push_back(std::move(h));
      covered.insert(w);
      w = m.apply(w);
    }
  }
  return result.monic();
}

bool is_squarefree(const RatPoly& p) {
  if (p.is_zero()) throw InvalidArgument("is_squarefree: zero polynomial");
  return gcd(p, p.derivative()).degree() == 0;
}

namespace {

// Positive divisors of |n| by trial division; n must be nonzero.
std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (mpz_class d = 2; d * d <= n; ++d) {
    if (d > 100000000) throw InvalidArgument("rational_roots: coefficient too large to factor");
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [prime, e] : factors) {
    const std::size_t existing = out.size();
    mpz_class pw = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pw *= prime;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * pw);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const RatPoly& p) {
  if (p.is_zero()) throw InvalidArgument("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  auto coeffs = p.coefficients();
  std::size_t shift = 0;
  while (coeffs[shift].is_zero()) ++shift;
  if (shift > 0) roots.emplace_back(0);
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(shift));
  if (coeffs.size() <= 1) return roots;
  // Clear denominators.
  mpz_class den = 1;
  for (const auto& c : coeffs) {
    mpz_class d = c.denominator();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  const RatPoly q(coeffs);
  const mpz_class a0 = (coeffs.front() * Rational(den, 1)).numerator();
  const mpz_class an = (coeffs.back() * Rational(den, 1)).numerator();
  std::set<Rational> found;
  for (const auto& num : divisors(a0)) {
    for (const auto& d : divisors(an)) {
      for (int s : {1, -1}) {
        Rational cand(num * s, d);
        if (q.evaluate(cand).is_zero()) found.insert(cand);
      }
    }
  }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool splits_squarefree(const RatPoly& p) {
  if (p.is_zero()) return false;
  return static_cast<int>(rational_roots(p).size()) == p.degree();
}

std::vector<Eigenspace> rational_eigenspaces(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("rational_eigenspaces: matrix not square");
  std::vector<Eigenspace> out;
  if (m.rows() == 0) return out;
  const RatPoly mp = minimal_polynomial(m);
  for (const auto& lambda : rational_roots(mp)) {
    RatMatrix shifted = m - RatMatrix::identity(m.rows()) * lambda;
    out.push_back({lambda, kernel_basis(shifted)});
  }
  return out;
}

bool is_rationally_diagonalizable(const RatMatrix& m) {
  if (m.rows() == 0) return true;
  return splits_squarefree(minimal_polynomial(m));
}

}  // namespace superkit
