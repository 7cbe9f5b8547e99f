#pragma once

#include "algact/matrix.hpp"

namespace algact {

/// Row Hermite normal form: U * M = H with U unimodular. H is in row echelon
/// form, every pivot is positive and the entries above a pivot lie in
/// [0, pivot). Zero rows sit at the bottom.
struct HermiteForm {
  ZMat H;
  ZMat U;
};
HermiteForm hnf(const ZMat& m);

/// Smith normal form: U * M * V = S with U, V unimodular and S diagonal,
/// d_1 | d_2 | ... with every d_i >= 0.
struct SmithForm {
  ZMat S;
  ZMat U;
  ZMat V;

  /// The diagonal d_1, ..., d_min(rows, cols).
  std::vector<BigInt> diagonal() const;
};
SmithForm snf(const ZMat& m);

}  // namespace algact
