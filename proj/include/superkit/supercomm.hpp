#ifndef SUPERKIT_SUPERCOMM_HPP
#define SUPERKIT_SUPERCOMM_HPP

#include <string>
#include <vector>

#include "superkit/liesuper.hpp"

namespace superkit {

// Finite-dimensional supercommutative algebra on a homogeneous basis,
// e_i e_j = sum_k m[i][j][k] e_k.
class SupercommAlgebra {
 public:
  SupercommAlgebra() = default;
  SupercommAlgebra(std::string name, std::vector<std::string> labels, std::vector<Parity> parity);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return parity_.size(); }
  Parity parity(std::size_t i) const { return parity_.at(i); }
  const std::vector<Parity>& parities() const { return parity_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  const SparseVector& product(std::size_t i, std::size_t j) const { return table_.at(i * dim() + j); }
  void set_product(std::size_t i, std::size_t j, const RatVector& v);
  const RatVector& unit() const { return unit_; }
  void set_unit(RatVector unit) { unit_ = std::move(unit); }

  RatVector multiply(const RatVector& a, const RatVector& b) const;
  RatVector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }
  bool is_homogeneous(const RatVector& a, Parity p) const;

  friend bool operator==(const SupercommAlgebra&, const SupercommAlgebra&) = default;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Parity> parity_;
  std::vector<SparseVector> table_;
  RatVector unit_;
};

// Column j is u(e_j).
struct OddDerivation {
  RatMatrix matrix;
  RatVector apply(const RatVector& a) const { return matrix.apply(a); }
};

struct SupercommViolation {
  enum class Kind { Shape, Parity, Unit, Supercommutativity, Associativity, Leibniz };
  Kind kind;
  std::size_t i = 0, j = 0, k = 0;
  std::string detail;
};

struct SupercommReport {
  std::vector<SupercommViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary(std::size_t max_items = 10) const;
};

SupercommReport validate_algebra(const SupercommAlgebra& a);
// u parity-reversing and u(ab) = u(a) b + (-1)^{|a|} a u(b) on basis pairs.
SupercommReport validate_derivation(const SupercommAlgebra& a, const OddDerivation& u);

// 1 lies in span{ a u(b) }, the ideal generated by the image of u.
bool is_nonvanishing(const SupercommAlgebra& a, const OddDerivation& u);

struct SplittingResult {
  RatVector f;                      // odd, u(f) = 1
  RatVector p;                      // odd, u(p) = 1 + eta
  RatVector eta;                    // nilpotent
  std::size_t eta_nilpotency = 0;   // least N with eta^N = 0
  RatVector p0;                     // component of p in ker h, h = u^2
  std::vector<Rational> h_spectrum;
};

// Throws Vanishing when u generates a proper ideal and NonSemisimpleSquare when
// u^2 is not diagonalizable over Q.
SplittingResult splitting_witness(const SupercommAlgebra& a, const OddDerivation& u);

// 1 lies in the image of u.
bool verify_no_splitting(const SupercommAlgebra& a, const OddDerivation& u);

// Catalog: exterior algebra on one generator with d/dxi; k[x]/(x^2 - 1) (x) Lambda(xi)
// with x d/dxi; Lambda(xi) (x) k[x]/(x^2) with u(xi) = x (vanishing).
struct SupercommPair {
  std::string name;
  SupercommAlgebra algebra;
  OddDerivation u;
  bool expect_splitting = true;
};
SupercommPair exterior_d();
SupercommPair unit_circle_pair();
SupercommPair vanishing_pair();

// The dual of U(g)/U(g) g0, an exterior algebra on g1*, with multiplication
// dual to the coproduct and u acting by the dual module action.
SupercommPair coinvariant_dual_pair(const LieSuperalgebra& g, const RatVector& u);

std::vector<SupercommPair> supercomm_catalog();

std::string format_element(const SupercommAlgebra& a, const RatVector& x);

}  // namespace superkit

#endif  // SUPERKIT_SUPERCOMM_HPP
