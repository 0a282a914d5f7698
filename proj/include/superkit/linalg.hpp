#ifndef SUPERKIT_LINALG_HPP
#define SUPERKIT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superkit/rational.hpp"

namespace superkit {

using RatVector = std::vector<Rational>;

RatVector zero_vector(std::size_t n);
RatVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const RatVector& v);
// a += s * b
void add_scaled(RatVector& a, const Rational& s, const RatVector& b);
RatVector scaled(const RatVector& v, const Rational& s);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
Rational dot(const RatVector& a, const RatVector& b);
// Scales v so that it has integer entries with gcd 1 and a positive first
// nonzero entry.
RatVector primitive_integral(const RatVector& v);
std::string to_string(const RatVector& v);

// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<RatVector>& columns, std::size_t rows);
  static RatMatrix diagonal(const RatVector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector column(std::size_t c) const;
  bool is_zero() const;
  Rational trace() const;
  RatMatrix transpose() const;
  RatVector apply(const RatVector& v) const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& s);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  // Flattened row-major entries.
  const std::vector<Rational>& entries() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// a*b - sign*b*a
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b, int sign = 1);
std::string to_string(const RatMatrix& m);

struct RowEchelon {
  RatMatrix reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon row_reduce(RatMatrix m);
std::size_t rank(const RatMatrix& m);

// Basis of the right null space {v : m v = 0}.
std::vector<RatVector> kernel_basis(const RatMatrix& m);
// Some x with m x = b, or nothing when the system is inconsistent.
std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& b);
std::optional<RatMatrix> inverse(const RatMatrix& m);

// Incrementally maintained, fully reduced echelon basis of a subspace of Q^dim.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  // Reduces v against the stored basis. The result is zero iff v is in the span.
  RatVector reduce(RatVector v) const;
  bool contains(const RatVector& v) const { return is_zero(reduce(v)); }
  // Returns true when v enlarged the span.
  bool insert(const RatVector& v);
  const std::vector<RatVector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t dim_;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> pivots_;
};

// Subspace helpers; subspaces are lists of spanning vectors in Q^dim.
std::vector<RatVector> span_basis(const std::vector<RatVector>& vectors, std::size_t dim);
std::size_t span_rank(const std::vector<RatVector>& vectors, std::size_t dim);
bool in_span(const std::vector<RatVector>& vectors, const RatVector& v);
// Coordinates of v in an independent family, if v lies in its span.
std::optional<RatVector> coordinates_in(const std::vector<RatVector>& basis, const RatVector& v);
std::vector<RatVector> intersect_spans(const std::vector<RatVector>& a,
                                       const std::vector<RatVector>& b, std::size_t dim);
bool same_span(const std::vector<RatVector>& a, const std::vector<RatVector>& b, std::size_t dim);

// Polynomial with rational coefficients, ascending degree.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coefficients);
  static RatPoly constant(const Rational& c);
  static RatPoly x();
  // (x - root)
  static RatPoly linear(const Rational& root);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  RatPoly monic() const;
  RatPoly derivative() const;
  Rational evaluate(const Rational& x) const;
  RatMatrix evaluate(const RatMatrix& m) const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct PolyDivision {
  RatPoly quotient;
  RatPoly remainder;
};
PolyDivision divide(const RatPoly& a, const RatPoly& b);
RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic, or zero
RatPoly lcm(const RatPoly& a, const RatPoly& b);  // monic

// Monic polynomial of least degree annihilating m.
RatPoly minimal_polynomial(const RatMatrix& m);
// True iff gcd(p, p') is constant. Throws InvalidArgument on the zero polynomial.
bool is_squarefree(const RatPoly& p);
// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const RatPoly& p);
// True iff p is squarefree and a product of rational linear factors.
bool splits_squarefree(const RatPoly& p);

struct Eigenspace {
  Rational value;
  std::vector<RatVector> basis;
};
// Eigenspaces for every rational eigenvalue of m, ascending by value.
std::vector<Eigenspace> rational_eigenspaces(const RatMatrix& m);
// True when m is diagonalizable over Q.
bool is_rationally_diagonalizable(const RatMatrix& m);

}  // namespace superkit

#endif  // SUPERKIT_LINALG_HPP
