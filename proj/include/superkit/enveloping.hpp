#ifndef SUPERKIT_ENVELOPING_HPP
#define SUPERKIT_ENVELOPING_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superkit/liesuper.hpp"

namespace superkit {

// A PBW monomial: generator indices sorted by the engine's order, odd
// generators appearing at most once.
using Monomial = std::vector<std::uint16_t>;

struct EnvelopingElement {
  std::map<Monomial, Rational> terms;  // no zero coefficients

  bool is_zero() const { return terms.empty(); }
  Rational coefficient(const Monomial& m) const;
  void add(const Monomial& m, const Rational& c);
  void add(const EnvelopingElement& x, const Rational& c = 1);
  friend bool operator==(const EnvelopingElement&, const EnvelopingElement&) = default;
};

// OddFirst: odd generators before even ones, each block ascending. Monomials
// with an even factor then lie in U g0, so U/(U g0) is spanned by odd monomials.
// EvenFirst is the mirror order used for U/(g0 U).
enum class PBWOrder { OddFirst, EvenFirst };

// PBW arithmetic in U(g). Products are formed by inserting one generator at a
// time, with memoized insertion results; a cache makes an engine unsafe to
// share between threads.
class Enveloping {
 public:
  explicit Enveloping(const LieSuperalgebra& g, PBWOrder order = PBWOrder::OddFirst);

  const LieSuperalgebra& algebra() const { return *g_; }
  PBWOrder order() const { return order_; }
  std::size_t rank_of(std::size_t generator) const { return rank_[generator]; }

  EnvelopingElement one() const;
  EnvelopingElement generator(std::size_t i) const;
  // Image of a Lie algebra element under g -> U(g).
  EnvelopingElement from_lie(const RatVector& x) const;

  EnvelopingElement normal_form(const std::vector<std::size_t>& word) const;
  EnvelopingElement multiply(const EnvelopingElement& x, const EnvelopingElement& y) const;

  // e_i * x and x * e_i. With modulo_even set the result is reduced modulo
  // U g0 (OddFirst engines, left products) or g0 U (EvenFirst engines, right
  // products), by dropping every monomial that has an even factor.
  EnvelopingElement left_multiply(std::size_t i, const EnvelopingElement& x, bool modulo_even = false) const;
  EnvelopingElement right_multiply(const EnvelopingElement& x, std::size_t i, bool modulo_even = false) const;

  // S(e_i) = -e_i, S(xy) = (-1)^{|x||y|} S(y) S(x).
  EnvelopingElement antipode(const EnvelopingElement& x) const;

  Parity parity(const Monomial& m) const;
  std::string format(const EnvelopingElement& x) const;

 private:
  const EnvelopingElement& lmul_monomial(std::uint16_t x, const Monomial& m, bool prune) const;
  const EnvelopingElement& rmul_monomial(const Monomial& m, std::uint16_t x, bool prune) const;
  bool has_even(const Monomial& m) const;
  bool precedes(std::uint16_t a, std::uint16_t b) const { return rank_[a] < rank_[b]; }

  const LieSuperalgebra* g_;
  PBWOrder order_;
  std::vector<std::size_t> rank_;
  mutable std::map<std::pair<std::uint16_t, Monomial>, EnvelopingElement> lcache_[2];
  mutable std::map<std::pair<Monomial, std::uint16_t>, EnvelopingElement> rcache_[2];
};

Rational counit(const EnvelopingElement& x);

// Independent rewriting of a word by adjacent swaps, always applying the
// leftmost or the rightmost available rule. Used to test confluence.
enum class RewriteStrategy { Leftmost, Rightmost };
EnvelopingElement rewrite_normal_form(const LieSuperalgebra& g, PBWOrder order, const std::vector<std::size_t>& word,
                                      RewriteStrategy strategy);

// Left: U/(U g0), a left U-module. Right: U/(g0 U), a right U-module, turned
// into a left g-module by z.w = -(-1)^{|z||w|} w z.
enum class Side { Left, Right };
std::string to_string(Side side);

// Coordinates are indexed by subsets S of the odd basis, encoded as bit masks
// over the positions in g.odd_indices(); x_S is the ascending product.
struct CoinvariantElement {
  Side side = Side::Left;
  RatVector coords;
  friend bool operator==(const CoinvariantElement&, const CoinvariantElement&) = default;
};

Monomial subset_monomial(const LieSuperalgebra& g, std::uint64_t mask);
// Throws InvalidArgument when the odd part is too large to enumerate.
std::size_t coinvariant_dim(const LieSuperalgebra& g);

CoinvariantElement coinvariant_project(const Enveloping& u, const EnvelopingElement& x, Side side);
// Lift of x_S-coordinates back to U(g) in the engine's order.
EnvelopingElement coinvariant_lift(const Enveloping& u, const CoinvariantElement& w);

// One matrix per basis element of g, acting on the 2^{dim g1} coordinates.
std::vector<RatMatrix> coinvariant_action(const LieSuperalgebra& g, Side side);
CoinvariantElement module_action(const LieSuperalgebra& g, const RatVector& z, const CoinvariantElement& w);

std::vector<RatVector> invariants(const LieSuperalgebra& g, Side side);

enum class GhostVerdict { Semisimple, NotSemisimple, NoInvariant };
std::string to_string(GhostVerdict v);

struct GhostElement {
  Side side = Side::Right;
  std::size_t invariant_dim = 0;
  RatVector v;  // empty-subset coordinate 1 when nonzero, else primitive integral
  Rational epsilon;
};

struct GhostResult {
  GhostElement ghost;
  GhostVerdict verdict = GhostVerdict::NoInvariant;
};

GhostResult ghost_criterion(const LieSuperalgebra& g, Side side = Side::Right);

// v = ((1) + t_1)((3) + t_2)...((2n-1) + t_n) in U(osp(1|2n)).
enum class DjokovicConvention {
  Literal,  // t_i = a_i b_i
  Swapped,  // t_i = b_i a_i
};

struct DjokovicReport {
  int n = 0;
  DjokovicConvention convention = DjokovicConvention::Swapped;
  bool invariant_left = false;              // v invariant in U/(U g0)
  bool invariant_right = false;             // v invariant in U/(g0 U)
  bool antipode_invariant_left = false;     // S(v) invariant in U/(U g0)
  bool antipode_invariant_right = false;    // S(v) invariant in U/(g0 U)
  bool proportional_to_ghost = false;       // image spans the computed invariant line
  Rational epsilon;
  Rational expected_epsilon;                // (2n-1)!!
  RatVector image_left;                     // v in U/(U g0)
  RatVector antipode_image_right;           // S(v) in U/(g0 U)
  bool ok() const;
};

EnvelopingElement djokovic_element(const Enveloping& u, int n, DjokovicConvention convention);
DjokovicReport verify_djokovic(int n, DjokovicConvention convention = DjokovicConvention::Swapped);

}  // namespace superkit

#endif  // SUPERKIT_ENVELOPING_HPP
