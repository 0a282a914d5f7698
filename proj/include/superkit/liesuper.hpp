#ifndef SUPERKIT_LIESUPER_HPP
#define SUPERKIT_LIESUPER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superkit/linalg.hpp"
#include "superkit/supermodule.hpp"

namespace superkit {

struct Term {
  std::size_t index;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};
using SparseVector = std::vector<Term>;  // sorted by index, no zero coefficients

// Finite-dimensional Lie superalgebra over Q given by structure constants
// [e_i, e_j] = sum_k c[i][j][k] e_k on a homogeneous basis.
//
// Elements are coordinate vectors of length dim(). The designated faithful
// representation, when present, is what element semisimplicity is measured
// in; the optional Cartan list holds commuting even elements.
class LieSuperalgebra {
 public:
  LieSuperalgebra() = default;
  LieSuperalgebra(std::string name, std::vector<std::string> labels, std::vector<Parity> parity);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t dim() const { return parity_.size(); }
  Parity parity(std::size_t i) const { return parity_.at(i); }
  const std::vector<Parity>& parities() const { return parity_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;
  const std::vector<std::size_t>& even_indices() const { return even_; }
  const std::vector<std::size_t>& odd_indices() const { return odd_; }
  std::size_t even_dim() const { return even_.size(); }
  std::size_t odd_dim() const { return odd_.size(); }

  // Structure constants of the basis pair (i, j).
  const SparseVector& structure(std::size_t i, std::size_t j) const { return table_.at(i * dim() + j); }
  Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  void set_structure_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& c);
  // Sets [e_i, e_j] = v and [e_j, e_i] = -(-1)^{|i||j|} v.
  void set_bracket_pair(std::size_t i, std::size_t j, const RatVector& v);
  RatVector basis_bracket(std::size_t i, std::size_t j) const;

  const std::optional<SuperModule>& faithful_rep() const { return rep_; }
  void set_faithful_rep(SuperModule rep) { rep_ = std::move(rep); }
  void clear_faithful_rep() { rep_.reset(); }
  const std::vector<RatVector>& cartan() const { return cartan_; }
  void set_cartan(std::vector<RatVector> cartan) { cartan_ = std::move(cartan); }

  RatVector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }

  friend bool operator==(const LieSuperalgebra&, const LieSuperalgebra&) = default;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Parity> parity_;
  std::vector<std::size_t> even_;
  std::vector<std::size_t> odd_;
  std::vector<SparseVector> table_;
  std::optional<SuperModule> rep_;
  std::vector<RatVector> cartan_;
};

struct Violation {
  enum class Kind { Parity, Antisymmetry, Jacobi };
  Kind kind;
  std::size_t i = 0, j = 0, k = 0;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary(std::size_t max_items = 10) const;
};

ValidationReport validate(const LieSuperalgebra& g);

bool is_even_element(const LieSuperalgebra& g, const RatVector& x);
bool is_odd_element(const LieSuperalgebra& g, const RatVector& x);
RatVector even_part(const LieSuperalgebra& g, const RatVector& x);
RatVector odd_part(const LieSuperalgebra& g, const RatVector& x);

RatVector bracket(const LieSuperalgebra& g, const RatVector& x, const RatVector& y);
// u^2 = [u, u] / 2 for a purely odd u.
RatVector odd_square(const LieSuperalgebra& g, const RatVector& u);
// Matrix of ad(x) in the algebra basis.
RatMatrix ad_matrix(const LieSuperalgebra& g, const RatVector& x);
SuperModule adjoint_module(const LieSuperalgebra& g);

// Semisimplicity of an even element, measured in the designated faithful
// representation: the minimal polynomial of rho(x) is squarefree.
bool is_semisimple_element(const LieSuperalgebra& g, const RatVector& x);
// Membership in the cone g1ss = {u odd : u^2 semisimple in g0}.
bool in_g1ss(const LieSuperalgebra& g, const RatVector& u);

std::vector<RatVector> center(const LieSuperalgebra& g);
// Centralizer in g0 of a family of even elements.
std::vector<RatVector> even_centralizer(const LieSuperalgebra& g, const std::vector<RatVector>& xs);
// Span of all brackets [x, y] for x in a, y in b.
std::vector<RatVector> bracket_span(const LieSuperalgebra& g, const std::vector<RatVector>& a,
                                    const std::vector<RatVector>& b);
bool is_ideal(const LieSuperalgebra& g, const std::vector<RatVector>& subspace);

bool is_reductive_even_part(const LieSuperalgebra& g);
// g0 acts semisimply on g1 (trace-form radical of the acting algebra is zero).
bool even_acts_semisimply_on_odd(const LieSuperalgebra& g);
bool is_quasireductive(const LieSuperalgebra& g);

struct Decomposition {
  std::vector<RatVector> center;
  std::vector<std::vector<RatVector>> ideals;
};

// Certifies g = center x I_1 x ... x I_k with each I_k a perfect ideal whose
// adjoint commutant is the scalars. Throws NotSemisimpleStructure otherwise.
Decomposition direct_sum_decompose(const LieSuperalgebra& g);

// Structure constants restricted to a subalgebra with the given basis. The
// faithful representation is restricted; the Cartan list is not carried over.
LieSuperalgebra restrict_to_subalgebra(const LieSuperalgebra& g, const std::vector<RatVector>& basis,
                                       const std::string& name);

// A subset of basis indices generating g as a Lie superalgebra.
std::vector<std::size_t> lie_generating_subset(const LieSuperalgebra& g);

std::string format_element(const LieSuperalgebra& g, const RatVector& x);

}  // namespace superkit

#endif  // SUPERKIT_LIESUPER_HPP
