#include "superkit/supermodule.hpp"

#include <algorithm>

#include "superkit/errors.hpp"

namespace superkit {

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Parity parse_parity(const std::string& s) {
  if (s == "even" || s == "0") return Parity::Even;
  if (s == "odd" || s == "1") return Parity::Odd;
  throw ParseError("unknown parity '" + s + "'");
}

std::size_t SuperModule::even_dim() const {
  return static_cast<std::size_t>(std::count(parity.begin(), parity.end(), Parity::Even));
}

RatMatrix SuperModule::act(const RatVector& x) const {
  if (x.size() != action.size()) throw DimensionMismatch("SuperModule::act: coordinate length");
  RatMatrix out(dim(), dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) out += action[i] * x[i];
  }
  return out;
}

bool has_parity(const RatMatrix& m, const std::vector<Parity>& parity, Parity expected) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero() && parity[r] + parity[c] != expected) return false;
    }
  }
  return true;
}

}  // namespace superkit
