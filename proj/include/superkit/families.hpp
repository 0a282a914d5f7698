#ifndef SUPERKIT_FAMILIES_HPP
#define SUPERKIT_FAMILIES_HPP

#include <string>
#include <vector>

#include "superkit/liesuper.hpp"

namespace superkit {

enum class ToyKind { OddNilpotent, OddSemisimple };

// gl(m|n) on matrix units E_ab (row-major), bracket = supercommutator,
// defining representation attached, Cartan = diagonal units.
LieSuperalgebra build_gl(int m, int n);

// sl(m|n): off-diagonal units (row-major) followed by h_i = E_ii - s E_{i+1,i+1}
// with s chosen so that the supertrace vanishes.
LieSuperalgebra build_sl(int m, int n);

// osp(1|2n) with odd part k^{2n} = span(a_1..a_n, b_1..b_n), symplectic form
// (a_i, b_j) = delta_ij, (a_i, a_j) = (b_i, b_j) = 0, and odd bracket
// [u, v](w) = (u, w) v + (v, w) u inside sp(2n) ⊂ gl(k^{2n}).
//
// Even basis, as matrices on k^{2n} in the basis (a, b):
//   H_i  = E_{a_i a_i} - E_{b_i b_i}
//   A_ij = E_{a_i a_j} - E_{b_j b_i}                   (i != j)
//   B_ij = E_{a_i b_j} + E_{a_j b_i}  (B_ii = E_{a_i b_i}) (i <= j)
//   C_ij = E_{b_i a_j} + E_{b_j a_i}  (C_ii = E_{b_i a_i}) (i <= j)
// The defining representation acts on k^{1|2n} with one even vector e_0:
// rho(u) e_0 = u and rho(u) w = (u, w) e_0 for odd u.
LieSuperalgebra build_osp1(int n);

LieSuperalgebra build_toy(ToyKind kind);

// Abelian even algebra of dimension k acting diagonally on k^k.
LieSuperalgebra build_torus(int k);

// Direct product; labels get a "@<factor>" suffix when there are several factors.
LieSuperalgebra build_product(const std::vector<LieSuperalgebra>& factors);

// Parses family specs such as "gl:1:1", "sl:2:1", "osp1:2", "torus:1",
// "toy_odd_semisimple", "toy_odd_nilpotent", "product:osp1:1,osp1:2".
LieSuperalgebra build_family(const std::string& spec);

// Algebra spanned by the given homogeneous matrices on a graded space, with
// bracket X Y - (-1)^{|X||Y|} Y X; the matrices become the faithful rep.
LieSuperalgebra from_matrix_basis(std::string name, std::vector<std::string> labels,
                                  std::vector<Parity> parity, const std::vector<RatMatrix>& matrices,
                                  const std::vector<Parity>& vector_parity);

}  // namespace superkit

#endif  // SUPERKIT_FAMILIES_HPP
