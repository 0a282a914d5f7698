#ifndef SUPERKIT_CATALOG_HPP
#define SUPERKIT_CATALOG_HPP

#include <random>
#include <string>
#include <vector>

#include "superkit/liesuper.hpp"
#include "superkit/supermodule.hpp"

namespace superkit {

// Family specs exercised by the batch checks.
const std::vector<std::string>& catalog_families();

// Two-dimensional gl(1|1)-module with even v0 of weight (a, b) and odd
// v1 = E21 v0; E12 v1 = (a + b) v0. Simple unless a + b = 0.
SuperModule gl11_weight_module(const LieSuperalgebra& gl11, const Rational& a, const Rational& b);

// Random small modules assembled from weight modules, the defining and
// trivial modules, duals and direct sums.
SuperModule random_gl11_module(const LieSuperalgebra& gl11, std::mt19937_64& rng);

// Random 2|2 module of the odd semisimple toy: an odd matrix U with
// diagonalizable U^2, which then represents u and h = U^2.
SuperModule random_toy_module(const LieSuperalgebra& toy, std::mt19937_64& rng);

struct CatalogModule {
  LieSuperalgebra algebra;
  std::string name;
  SuperModule module;
};

// Trivial, defining, induced, adjoint and dual modules of gl(1|1), osp(1|2)
// and both toys, weight modules of gl(1|1) and sums, and random toy modules;
// only those of dimension at most max_dim.
std::vector<CatalogModule> small_catalog_modules(std::size_t max_dim, std::uint64_t seed);

}  // namespace superkit

#endif  // SUPERKIT_CATALOG_HPP
