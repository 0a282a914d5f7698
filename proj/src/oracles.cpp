#include "superkit/oracles.hpp"

#include <stdexcept>

namespace superkit::oracle {

std::size_t bareiss_rank(const RatMatrix& m) {
  // Scale every row to integers first.
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class den = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_class d = m(r, c).denominator();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      a[r][c] = m(r, c).numerator() * (den / m(r, c).denominator());
    }
  }
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      for (std::size_t k = c + 1; k < m.cols(); ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

namespace {
void trim(std::vector<Rational>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}
}  // namespace

std::vector<Rational> euclid_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      const Rational f = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& x : a) x /= lead;
  }
  return a;
}

RatMatrix eval_poly(const std::vector<Rational>& ascending, const RatMatrix& m) {
  RatMatrix acc(m.rows(), m.cols());
  RatMatrix power = RatMatrix::identity(m.rows());
  for (const auto& c : ascending) {
    acc += power * c;
    power = power * m;
  }
  return acc;
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

RatMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  RatMatrix m = RatMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int step = 0; step < static_cast<int>(4 * n); ++step) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const Rational f = coef(rng);
    for (std::size_t c = 0; c < n; ++c) m(i, c) += f * m(j, c);
  }
  return m;
}

Rational determinant_laplace(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, kk++) = m(r, k);
      }
    const Rational term = m(0, c) * determinant_laplace(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

RatMatrix cramer_inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  const Rational det = determinant_laplace(m);
  if (det.is_zero()) throw std::runtime_error("singular");
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      RatMatrix minor(n - 1, n - 1);
      for (std::size_t i = 0, ii = 0; i < n; ++i) {
        if (i == r) continue;
        for (std::size_t k = 0, kk = 0; k < n; ++k) {
          if (k == c) continue;
          minor(ii, kk++) = m(i, k);
        }
        ++ii;
      }
      const Rational cof = determinant_laplace(minor) * Rational(((r + c) % 2 == 0) ? 1 : -1);
      inv(c, r) = cof / det;
    }
  }
  return inv;
}



std::vector<RatVector> cyclic_submodule(const SuperModule& m, const RatVector& v) {
  std::vector<RatVector> basis;
  std::vector<RatVector> frontier{v};
  auto independent = [&](const RatVector& w) {
    auto trial = basis;
    trial.push_back(w);
    return bareiss_rank(RatMatrix::from_rows(trial, m.dim())) == trial.size();
  };
  while (!frontier.empty()) {
    RatVector w = frontier.back();
    frontier.pop_back();
    if (is_zero(w) || !independent(w)) continue;
    basis.push_back(w);
    for (const auto& a : m.action) frontier.push_back(a.apply(w));
  }
  return basis;
}

bool has_invariant_complement(const SuperModule& m, const std::vector<RatVector>& basis) {
  // Unknown Q (k x n) with Q B = I and Q rho(x) = R_x Q, where rho(x) B = B R_x.
  const std::size_t n = m.dim(), k = basis.size();
  if (k == 0 || k == n) return true;
  const RatMatrix b = RatMatrix::from_columns(basis, n);
  std::vector<RatVector> rows;
  RatVector rhs;
  auto unknown = [&](std::size_t r, std::size_t c) { return r * n + c; };
  // Q B = I
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) {
      RatVector row(k * n);
      for (std::size_t j = 0; j < n; ++j) row[unknown(r, j)] = b(j, c);
      rows.push_back(row);
      rhs.push_back(r == c ? Rational(1) : Rational(0));
    }
  for (const auto& a : m.action) {
    // R_x from rho(x) B = B R_x, solved column by column
    const RatMatrix ab = a * b;
    RatMatrix rx(k, k);
    for (std::size_t c = 0; c < k; ++c) {
      // least-effort solve: B has full column rank, pick rows by brute force elimination
      std::vector<RatVector> aug;
      for (std::size_t j = 0; j < n; ++j) {
        RatVector row = b.row(j);
        row.push_back(ab(j, c));
        aug.push_back(row);
      }
      // Gaussian elimination on the augmented system
      std::size_t piv_row = 0;
      std::vector<std::size_t> piv_col;
      for (std::size_t col = 0; col < k && piv_row < n; ++col) {
        std::size_t p = piv_row;
        while (p < n && aug[p][col].is_zero()) ++p;
        if (p == n) continue;
        std::swap(aug[p], aug[piv_row]);
        const Rational lead = aug[piv_row][col];
        for (auto& x : aug[piv_row]) x /= lead;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == piv_row || aug[r][col].is_zero()) continue;
          const Rational f = aug[r][col];
          for (std::size_t q = 0; q <= k; ++q) aug[r][q] -= f * aug[piv_row][q];
        }
        piv_col.push_back(col);
        ++piv_row;
      }
      for (std::size_t r = 0; r < piv_col.size(); ++r) rx(piv_col[r], c) = aug[r][k];
    }
    // Q rho(x) - R_x Q = 0, entrywise
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        RatVector row(k * n);
        for (std::size_t j = 0; j < n; ++j) row[unknown(r, j)] += a(j, c);
        for (std::size_t s = 0; s < k; ++s) row[unknown(s, c)] -= rx(r, s);
        rows.push_back(row);
        rhs.push_back(0);
      }
  }
  // Consistency of rows * q = rhs by comparing ranks.
  std::vector<RatVector> aug = rows;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
  return bareiss_rank(RatMatrix::from_rows(rows, k * n)) == bareiss_rank(RatMatrix::from_rows(aug, k * n + 1));
}

bool semisimple_by_submodules(const SuperModule& m) {
  const std::size_t n = m.dim();
  for (Parity p : {Parity::Even, Parity::Odd}) {
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < n; ++i)
      if (m.parity[i] == p) slots.push_back(i);
    std::size_t total = 1;
    for (std::size_t i = 0; i < slots.size(); ++i) total *= 3;
    for (std::size_t code = 1; code < total; ++code) {
      RatVector v(n);
      std::size_t c = code;
      for (auto s : slots) {
        v[s] = static_cast<long>(c % 3) - 1;
        c /= 3;
      }
      if (is_zero(v)) continue;
      if (!has_invariant_complement(m, cyclic_submodule(m, v))) return false;
    }
  }
  return true;
}

}  // namespace superkit::oracle
