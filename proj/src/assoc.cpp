#include "superkit/assoc.hpp"

#include <deque>
#include <map>

#include "superkit/errors.hpp"

namespace superkit {

namespace {

struct Grade {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  EchelonSpan span{0};
  std::vector<std::size_t> members;  // indices into ActingAlgebra::basis
};

RatVector weight_difference(const std::vector<RatVector>& w, std::size_t r, std::size_t c) {
  if (w.empty()) return {};
  return w[r] - w[c];
}

}  // namespace

std::vector<RatVector> diagonal_weights(const std::vector<RatMatrix>& diagonals, std::size_t n) {
  if (diagonals.empty()) return {};
  std::vector<RatVector> w(n, RatVector(diagonals.size()));
  for (std::size_t k = 0; k < diagonals.size(); ++k) {
    const RatMatrix& d = diagonals[k];
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (r != c && !d(r, c).is_zero()) return {};
      }
      w[r][k] = d(r, r);
    }
  }
  return w;
}

ActingAlgebra acting_algebra(const std::vector<RatMatrix>& generators, std::size_t n,
                             const std::vector<RatVector>& weights) {
  if (!weights.empty() && weights.size() != n) {
    throw DimensionMismatch("acting_algebra: one weight per basis vector required");
  }
  ActingAlgebra out;
  out.n = n;
  if (n == 0) return out;

  std::map<RatVector, Grade> grades;
  auto grade_for = [&](const RatVector& key) -> Grade& {
    auto it = grades.find(key);
    if (it != grades.end()) return it->second;
    Grade g;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (weight_difference(weights, r, c) == key) g.cells.emplace_back(r, c);
    g.span = EchelonSpan(g.cells.size());
    return grades.emplace(key, std::move(g)).first->second;
  };

  // Homogeneous components of the generators.
  std::vector<std::pair<RatMatrix, RatVector>> components;
  for (const auto& gen : generators) {
    if (gen.rows() != n || gen.cols() != n) throw DimensionMismatch("acting_algebra: generator shape");
    std::map<RatVector, RatMatrix> parts;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (gen(r, c).is_zero()) continue;
        auto key = weight_difference(weights, r, c);
        auto [it, fresh] = parts.try_emplace(key, n, n);
        it->second(r, c) = gen(r, c);
      }
    }
    for (auto& [key, m] : parts) components.emplace_back(std::move(m), key);
  }

  std::deque<std::size_t> queue;
  auto try_insert = [&](RatMatrix m, const RatVector& key) {
    Grade& g = grade_for(key);
    RatVector v(g.cells.size());
    for (std::size_t i = 0; i < g.cells.size(); ++i) v[i] = m(g.cells[i].first, g.cells[i].second);
    if (!g.span.insert(v)) return;
    g.members.push_back(out.basis.size());
    out.basis.push_back(std::move(m));
    out.grades.push_back(key);
    queue.push_back(out.basis.size() - 1);
  };

  const RatVector zero_key = weights.empty() ? RatVector{} : zero_vector(weights.front().size());
  try_insert(RatMatrix::identity(n), zero_key);
  while (!queue.empty()) {
    const std::size_t b = queue.front();
    queue.pop_front();
    for (const auto& [gen, gkey] : components) {
      RatMatrix prod = gen * out.basis[b];
      if (prod.is_zero()) continue;
      RatVector key = weights.empty() ? RatVector{} : gkey + out.grades[b];
      try_insert(std::move(prod), key);
    }
  }

  // Trace-form radical, computed block by block: tr(XY) vanishes unless the
  // grades of X and Y are opposite.
  for (const auto& [key, g] : grades) {
    RatVector neg = scaled(key, -1);
    auto it = grades.find(neg);
    if (it == grades.end()) {
      out.radical_dim += g.members.size();
      continue;
    }
    const Grade& h = it->second;
    RatMatrix gram(g.members.size(), h.members.size());
    for (std::size_t a = 0; a < g.members.size(); ++a) {
      const RatMatrix& x = out.basis[g.members[a]];
      for (std::size_t b = 0; b < h.members.size(); ++b) {
        const RatMatrix& y = out.basis[h.members[b]];
        Rational t;
        for (const auto& [r, c] : g.cells) {
          const Rational& xv = x(r, c);
          if (!xv.is_zero()) {
            const Rational& yv = y(c, r);
            if (!yv.is_zero()) t += xv * yv;
          }
        }
        gram(a, b) = t;
      }
    }
    out.radical_dim += g.members.size() - rank(gram);
  }
  return out;
}

}  // namespace superkit
