#include "algact/charpoly.hpp"

namespace algact {

namespace {

using PolyMatrix = std::vector<std::vector<QPoly>>;

// One elimination pass on row/column t. Returns false when the pivot had to
// be replaced by a remainder of smaller degree, so the caller restarts.
bool eliminate(PolyMatrix& a, std::size_t t) {
  const std::size_t n = a.size();
  for (std::size_t i = t + 1; i < n; ++i) {
    if (a[i][t].is_zero()) continue;
    const QPoly q = divrem(a[i][t], a[t][t]).first;
    for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
    if (!a[i][t].is_zero()) {
      std::swap(a[i], a[t]);
      return false;
    }
  }
  for (std::size_t j = t + 1; j < n; ++j) {
    if (a[t][j].is_zero()) continue;
    const QPoly q = divrem(a[t][j], a[t][t]).first;
    for (std::size_t i = t; i < n; ++i) a[i][j] -= q * a[i][t];
    if (!a[t][j].is_zero()) {
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i][j], a[i][t]);
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<QPoly> poly_invariant_factors(const QMat& m) {
  require_square(m, "poly_invariant_factors");
  const auto n = static_cast<std::size_t>(m.rows());
  PolyMatrix a(n, std::vector<QPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const BigRat entry = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      a[i][j] = QPoly::constant(-entry);
      if (i == j) a[i][j] += QPoly::monomial(1, 1);
    }

  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pi = n, pj = n;
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (!a[i][j].is_zero() && (pi == n || a[i][j].degree() < a[pi][pj].degree())) {
          pi = i;
          pj = j;
        }
    if (pi == n) break;
    std::swap(a[t], a[pi]);
    for (std::size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][pj]);

    for (;;) {
      if (!eliminate(a, t)) continue;
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!divides(a[t][t], a[i][j])) {
            bad = i;
            break;
          }
      if (bad == n) break;
      for (std::size_t j = t; j < n; ++j) a[t][j] += a[bad][j];
    }
    a[t][t] = monic(a[t][t]);
  }

  std::vector<QPoly> factors;
  for (std::size_t t = 0; t < n; ++t)
    if (a[t][t].degree() >= 1) factors.push_back(a[t][t]);
  return factors;
}

QPoly minimal_polynomial(const QMat& m) { return poly_invariant_factors(m).back(); }

}  // namespace algact
