#ifndef SUPERKIT_ASSOC_HPP
#define SUPERKIT_ASSOC_HPP

#include <cstddef>
#include <vector>

#include "superkit/linalg.hpp"

namespace superkit {

// The unital associative algebra generated by a family of n x n matrices.
//
// The closure runs separately in each weight space of End(Q^n) when a weight
// labelling of the basis is supplied. Weights must come from diagonal
// matrices that belong to the generated algebra (for example rho(t) for t in
// a Cartan subalgebra), so that the algebra is graded by them.
struct ActingAlgebra {
  std::size_t n = 0;
  std::vector<RatMatrix> basis;
  std::vector<RatVector> grades;  // grade of each basis element
  std::size_t radical_dim = 0;    // dimension of the trace-form radical

  std::size_t dim() const { return basis.size(); }
  bool semisimple() const { return radical_dim == 0; }
};

ActingAlgebra acting_algebra(const std::vector<RatMatrix>& generators, std::size_t n,
                             const std::vector<RatVector>& weights = {});

// Weights of the basis vectors read off from the given matrices when every
// one of them is diagonal; returns an empty list otherwise.
std::vector<RatVector> diagonal_weights(const std::vector<RatMatrix>& diagonals, std::size_t n);

}  // namespace superkit

#endif  // SUPERKIT_ASSOC_HPP
