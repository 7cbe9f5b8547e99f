#pragma once

#include <vector>

#include "algact/matrix.hpp"
#include "algact/poly.hpp"

namespace algact {

/// det(zI - M) by Berkowitz's division-free recurrence, so the same code runs
/// over BigInt and BigRat.
template <typename Scalar>
Poly<Scalar> charpoly(const Mat<Scalar>& m) {
  require_square(m, "charpoly");
  const Eigen::Index n = m.rows();
  // Coefficients of the leading principal minor's charpoly, highest first.
  std::vector<Scalar> v{Scalar(1), Scalar(-m(0, 0))};
  for (Eigen::Index r = 1; r < n; ++r) {
    const Mat<Scalar> a = m.topLeftCorner(r, r);
    const Mat<Scalar> row = m.block(r, 0, 1, r);
    Vec<Scalar> x = m.block(0, r, r, 1);
    std::vector<Scalar> t(static_cast<std::size_t>(r + 2));
    t[0] = Scalar(1);
    t[1] = -m(r, r);
    for (Eigen::Index k = 0; k < r; ++k) {
      t[static_cast<std::size_t>(k + 2)] = -(row * x)(0, 0);
      x = a * x;
    }
    std::vector<Scalar> next(static_cast<std::size_t>(r + 2), Scalar(0));
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t j = 0; j <= std::min(i, static_cast<std::size_t>(r)); ++j) next[i] += t[i - j] * v[j];
    v = std::move(next);
  }
  return Poly<Scalar>(std::vector<Scalar>(v.rbegin(), v.rend()));
}

/// Invariant factors of zI - M over Q[z], via Smith normal form over the
/// polynomial ring. Monic, each divides the next, the trivial factors 1 are
/// dropped, and the product equals charpoly(M).
std::vector<QPoly> poly_invariant_factors(const QMat& m);
inline std::vector<QPoly> poly_invariant_factors(const ZMat& m) { return poly_invariant_factors(to_rational(m)); }

/// The last invariant factor.
QPoly minimal_polynomial(const QMat& m);

}  // namespace algact
