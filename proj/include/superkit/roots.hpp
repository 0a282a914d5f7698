#ifndef SUPERKIT_ROOTS_HPP
#define SUPERKIT_ROOTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superkit/liesuper.hpp"

namespace superkit {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct RootSpace {
  RatVector weight;  // value of each Cartan element
  Parity parity = Parity::Even;
  std::vector<RatVector> basis;
  bool is_zero_weight() const { return is_zero(weight); }
};

struct RootDatum {
  std::vector<RatVector> cartan;
  std::vector<RootSpace> roots;  // even spaces first, then by weight
  const RootSpace* find(const RatVector& weight, Parity parity) const;
};

// Simultaneous eigenspaces of ad(t), t in cartan. Throws NotEven, InvalidArgument
// (non-commuting elements) or NonSemisimpleCartanAction.
RootDatum root_decomposition(const LieSuperalgebra& g, const std::vector<RatVector>& cartan);

// Grows a commuting family of ad-semisimple even elements with rational
// spectrum inside its own centralizer until the family is self-centralizing in
// g0. Throws CartanSearchFailed when the attempt budget runs out.
std::vector<RatVector> find_cartan(const LieSuperalgebra& g, std::uint64_t seed = kDefaultSeed,
                                   int attempts_per_step = 200);

// Cartan of g if set, else a searched one.
std::vector<RatVector> cartan_or_search(const LieSuperalgebra& g, std::uint64_t seed = kDefaultSeed);

struct ClassificationOutcome {
  enum class Kind { Osp, Witness, Inconclusive };
  Kind kind = Kind::Inconclusive;
  int n = 0;
  // Images in g of the basis of build_osp1(n), in that algebra's basis order.
  std::vector<RatVector> basis_map;
  RatVector witness;
  std::string reason;  // which step produced the outcome

  static ClassificationOutcome osp(int n, std::vector<RatVector> map);
  static ClassificationOutcome found(RatVector u, std::string reason);
  static ClassificationOutcome inconclusive(std::string reason);
};

std::string to_string(ClassificationOutcome::Kind kind);

// Odd root analysis for a simple quasireductive g, then an explicit
// isomorphism from build_osp1(n) when no witness turns up.
ClassificationOutcome classify_simple(const LieSuperalgebra& g, const std::vector<RatVector>& cartan);

// phi([x, y]) = [phi(x), phi(y)] on all basis pairs of src, and phi is injective.
bool is_isomorphism(const LieSuperalgebra& src, const LieSuperalgebra& dst, const std::vector<RatVector>& images);

struct ScanFactor {
  std::vector<RatVector> ideal;  // basis in g
  std::size_t even_dim = 0, odd_dim = 0;
  ClassificationOutcome outcome;
};

struct ScanResult {
  std::optional<RatVector> witness;  // nonzero, in g1ss
  bool certified_zero = false;       // every odd factor is an osp(1|2n)
  bool used_fallback = false;        // g did not split; odd roots of g searched directly
  std::vector<ScanFactor> factors;
  std::string reason;
};

// Splits g into center and simple ideals and classifies each odd factor.
// Empty cartan means cartan_or_search(g, seed).
ScanResult g1ss_structural_scan(const LieSuperalgebra& g, const std::vector<RatVector>& cartan = {},
                                std::uint64_t seed = kDefaultSeed);

// Random odd elements with small integer coordinates; returns the first
// nonzero one in g1ss.
std::optional<RatVector> sample_g1ss(const LieSuperalgebra& g, std::size_t samples, std::uint64_t seed);

}  // namespace superkit

#endif  // SUPERKIT_ROOTS_HPP
