#ifndef SUPERKIT_SUPERMODULE_HPP
#define SUPERKIT_SUPERMODULE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "superkit/linalg.hpp"

namespace superkit {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}
inline int as_int(Parity p) { return static_cast<int>(p); }
// (-1)^{|a||b|}
inline int koszul_sign(Parity a, Parity b) {
  return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}
std::string to_string(Parity p);
Parity parse_parity(const std::string& s);

// A representation of a Lie superalgebra on a parity-graded space: one
// matrix per algebra basis element, acting on column vectors.
struct SuperModule {
  std::vector<Parity> parity;
  std::vector<RatMatrix> action;

  std::size_t dim() const { return parity.size(); }
  std::size_t even_dim() const;
  std::size_t odd_dim() const { return dim() - even_dim(); }
  // rho(x) for an algebra element x given in coordinates.
  RatMatrix act(const RatVector& x) const;

  friend bool operator==(const SuperModule&, const SuperModule&) = default;
};

// Parity-preserving (even) or parity-reversing (odd) check for a matrix on
// a graded space; returns false when the matrix is inhomogeneous.
bool has_parity(const RatMatrix& m, const std::vector<Parity>& parity, Parity expected);

}  // namespace superkit

#endif  // SUPERKIT_SUPERMODULE_HPP
