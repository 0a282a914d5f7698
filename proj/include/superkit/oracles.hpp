// Independent reference computations used as oracles by the tests and the
// acceptance driver. Nothing here calls the elimination, rewriting or
// radical routines they check.
#ifndef SUPERKIT_ORACLES_HPP
#define SUPERKIT_ORACLES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "superkit/linalg.hpp"
#include "superkit/supermodule.hpp"

namespace superkit::oracle {

// Fraction-free Bareiss elimination rank.
std::size_t bareiss_rank(const RatMatrix& m);

// Polynomial gcd by the textbook Euclidean algorithm on coefficient lists.
std::vector<Rational> euclid_gcd(std::vector<Rational> a, std::vector<Rational> b);

// p(m) computed by naive powers.
RatMatrix eval_poly(const std::vector<Rational>& ascending, const RatMatrix& m);

// Random integer matrix with entries in [-range, range].
RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range);

// Random unimodular-ish invertible integer matrix (product of elementary moves).
RatMatrix random_invertible(std::mt19937_64& rng, std::size_t n);

// Inverse by the adjugate / Cramer's rule on a small matrix.
RatMatrix cramer_inverse(const RatMatrix& m);
Rational determinant_laplace(const RatMatrix& m);

// Smallest subspace containing v and stable under every action matrix.
std::vector<RatVector> cyclic_submodule(const SuperModule& m, const RatVector& v);

// Existence of an invariant complement to the submodule spanned by `basis`,
// decided by solving for an equivariant projection onto it.
bool has_invariant_complement(const SuperModule& m, const std::vector<RatVector>& basis);

// Semisimplicity by search: every cyclic submodule generated by a
// homogeneous vector with entries in {-1, 0, 1} must have a complement.
bool semisimple_by_submodules(const SuperModule& m);

}  // namespace superkit::oracle

#endif  // SUPERKIT_ORACLES_HPP
