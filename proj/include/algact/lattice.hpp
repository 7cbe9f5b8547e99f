#pragma once

#include <cstdint>
#include <vector>

#include "algact/matrix.hpp"

namespace algact {

/// A full-rank sublattice of Z^n. The basis is stored as the rows of a square
/// matrix in row Hermite normal form (upper triangular, positive diagonal,
/// entries above the diagonal reduced), so two lattices are equal exactly
/// when their bases are.
class Lattice {
 public:
  /// The lattice spanned by the given vectors. DomainError when they do not
  /// span a rank-n subgroup.
  static Lattice from_generators(Eigen::Index n, const std::vector<ZVec>& vectors);
  /// Rows of m are the generators.
  static Lattice from_rows(const ZMat& m);
  static Lattice full(Eigen::Index n);
  /// k * Z^n
  static Lattice scaled(Eigen::Index n, const BigInt& k);

  Eigen::Index rank() const { return basis_.rows(); }
  const ZMat& basis() const { return basis_; }
  BigInt index() const;
  bool contains(const ZVec& x) const;
  /// Does this lattice contain every vector of `other`?
  bool contains(const Lattice& other) const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }
  friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }
  /// Arbitrary total order, for use as a set key.
  friend bool operator<(const Lattice& a, const Lattice& b);

 private:
  explicit Lattice(ZMat basis) : basis_(std::move(basis)) {}
  ZMat basis_;
};

Lattice intersect(const Lattice& a, const Lattice& b);
Lattice sum(const Lattice& a, const Lattice& b);

/// M * L for a nonsingular integer M acting on column vectors.
Lattice image(const ZMat& m, const Lattice& l);
/// { x in Z^n : M x in L } for a nonsingular integer M.
Lattice preimage(const ZMat& m, const Lattice& l);

std::string to_string(const Lattice& l);

/// The finite group Z^n / L, decomposed as a sum of cyclic groups Z/d_i with
/// d_1 | d_2 | ... via the Smith form of the basis.
class QuotientLevel {
 public:
  explicit QuotientLevel(Lattice l);

  const Lattice& lattice() const { return lattice_; }
  const std::vector<BigInt>& cyclic_factors() const { return factors_; }
  BigInt order() const { return lattice_.index(); }

  /// Coordinates of the coset x + L in the cyclic decomposition, each in [0, d_i).
  ZVec coords(const ZVec& x) const;
  /// A vector in the coset with the given coordinates.
  ZVec from_coords(const ZVec& c) const;
  /// Canonical representative of x + L: the unique vector of the coset with
  /// 0 <= x_j < h_j, h_j being the diagonal of the Hermite basis.
  ZVec reduce(const ZVec& x) const;
  /// Every canonical representative; DomainError above `cap` elements.
  std::vector<ZVec> representatives(std::uint64_t cap = 1'000'000) const;

 private:
  Lattice lattice_;
  std::vector<BigInt> factors_;
  ZMat v_;      // coset coordinates are (x^T V) mod d
  ZMat v_inv_;
};

}  // namespace algact
