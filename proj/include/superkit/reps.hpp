#ifndef SUPERKIT_REPS_HPP
#define SUPERKIT_REPS_HPP

#include <string>
#include <vector>

#include "superkit/liesuper.hpp"
#include "superkit/supermodule.hpp"

namespace superkit {

struct ModuleViolation {
  enum class Kind { Shape, Parity, Law };
  Kind kind;
  std::size_t i = 0, j = 0;
  std::string detail;
};

struct ModuleReport {
  std::vector<ModuleViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary(std::size_t max_items = 10) const;
};

// Checks shapes, parity of every action matrix, and
// rho([x, y]) = rho(x) rho(y) - (-1)^{|x||y|} rho(y) rho(x) on basis pairs.
ModuleReport validate_module(const LieSuperalgebra& g, const SuperModule& m);

SuperModule trivial_module(const LieSuperalgebra& g);
// x (m (x) n) = xm (x) n + (-1)^{|x||m|} m (x) xn, basis index i * dim N + j.
SuperModule tensor(const LieSuperalgebra& g, const SuperModule& m, const SuperModule& n);
// Dual basis; x f = -(-1)^{|x||f|} f o x.
SuperModule dual(const LieSuperalgebra& g, const SuperModule& m);
SuperModule direct_sum(const SuperModule& m, const SuperModule& n);

// U(g) / U(g) g0 with basis x_S, parity |S| mod 2.
SuperModule induced_trivial(const LieSuperalgebra& g);

// Trace-form radical of the associative algebra generated by the action.
bool is_module_semisimple(const LieSuperalgebra& g, const SuperModule& m);

// All weights of the Cartan elements on m are integers and the Cartan acts
// diagonalizably. Modules failing this are still usable, only flagged.
bool is_integrable(const LieSuperalgebra& g, const SuperModule& m);

struct DSResult {
  std::vector<RatVector> homology_basis;  // representatives in m, h-invariant and u-closed
  std::size_t even_dim = 0;
  std::size_t odd_dim = 0;
  std::size_t fixed_dim = 0;  // dim of the h-invariants
};

// (M^h)_u with h = u^2: homology of rho(u) on ker rho(h).
DSResult ds_functor(const LieSuperalgebra& g, const RatVector& u, const SuperModule& m);

struct DSTensorReport {
  DSResult m, n, product;
  std::size_t expected_even = 0, expected_odd = 0;
  bool ok() const { return product.even_dim == expected_even && product.odd_dim == expected_odd; }
};

DSTensorReport ds_tensor_check(const LieSuperalgebra& g, const RatVector& u, const SuperModule& m,
                               const SuperModule& n);

}  // namespace superkit

#endif  // SUPERKIT_REPS_HPP
