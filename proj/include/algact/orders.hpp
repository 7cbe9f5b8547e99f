#pragma once

#include <string>
#include <vector>

#include "algact/action.hpp"
#include "algact/matrix.hpp"
#include "algact/poly.hpp"

namespace algact {

class QuotientAlgebra;

/// A ring structure on Z^n: e_i e_j = sum_k c(i, j, k) e_k, with unit `one`.
/// Constants are stored flat at index (i n + j) n + k.
class StructureRing {
 public:
  StructureRing(Eigen::Index n, std::vector<BigInt> constants, ZVec one);

  Eigen::Index rank() const { return n_; }
  const std::vector<BigInt>& constants() const { return c_; }
  const BigInt& constant(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    return c_[static_cast<std::size_t>((i * n_ + j) * n_ + k)];
  }
  const ZVec& one() const { return one_; }
  ZVec basis(Eigen::Index i) const;

  ZVec mul(const ZVec& a, const ZVec& b) const;

  friend bool operator==(const StructureRing& a, const StructureRing& b) {
    return a.n_ == b.n_ && a.c_ == b.c_ && a.one_ == b.one_;
  }

 private:
  Eigen::Index n_;
  std::vector<BigInt> c_;
  ZVec one_;
};

struct RingValidation {
  bool associative = false;
  bool unit = false;
  bool commutative = false;
  std::string failure;  // first failing law, empty when valid
  bool valid() const { return associative && unit; }
};
RingValidation validate(const StructureRing& r);

/// Left multiplication by a; column j is a e_j.
ZMat act_matrix(const StructureRing& r, const ZVec& a);
BigInt norm(const StructureRing& r, const ZVec& a);
bool is_regular(const StructureRing& r, const ZVec& a);
/// Smallest k >= 1 with a + k 1 regular. At most rank + 1.
long regular_shift(const StructureRing& r, const ZVec& a);

/// Left multiplication by the given elements. Free-abelian when the elements
/// commute, free otherwise. DomainError on an invalid ring or a non-regular
/// element.
AlgebraicAction action_from_ring(const StructureRing& r, const std::vector<ZVec>& gens,
                                 const std::vector<std::string>& names = {});

/// Z[z]/(f) on the basis 1, z, ..., z^{d-1}.
StructureRing ring_from_poly(const ZPoly& f);
/// The staircase basis of a quotient algebra; DomainError when a product of
/// basis monomials has non-integral coordinates.
StructureRing ring_from_quotient(const QuotientAlgebra& qa);

/// "Z", "Z[i]", "Z[sqrt2]", "M2(Z)" (basis E11, E12, E21, E22), "Z[C2]".
StructureRing ring_preset(const std::string& name);
std::vector<std::string> ring_preset_names();

}  // namespace algact
