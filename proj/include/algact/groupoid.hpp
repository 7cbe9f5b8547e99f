#pragma once

#include <optional>
#include <set>
#include <vector>

#include "algact/action.hpp"

namespace algact {

/// Element (a, g) of Q^n x| GL_n(Q) with (a, g)(b, h) = (a + g b, g h).
struct SemidirectElem {
  QVec vec;
  QMat mat;

  static SemidirectElem identity(Eigen::Index n);
  static SemidirectElem translation(const QVec& a);
  static SemidirectElem linear(const QMat& g);

  /// The affine map x -> a + g x.
  QVec operator()(const QVec& x) const { return vec + mat * x; }
  friend bool operator==(const SemidirectElem& x, const SemidirectElem& y) {
    return x.vec == y.vec && x.mat == y.mat;
  }
};

SemidirectElem sd_mul(const SemidirectElem& x, const SemidirectElem& y);
SemidirectElem sd_inv(const SemidirectElem& x);
/// The (n+1)x(n+1) matrix [[g, a], [0, 1]]; a group homomorphism.
QMat affine_matrix(const SemidirectElem& x);

/// x + sigma_s^{-1} C  ->  sigma_s x + C on canonical representatives.
struct LevelMap {
  Lattice source;  // sigma_s^{-1} C
  Lattice target;  // C
  std::vector<std::pair<ZVec, ZVec>> table;
  BigInt image_size;
  BigInt image_codim;  // [A : sigma_s A + C]
};
/// `s` must be a monoid word. DomainError above `cap` representatives.
LevelMap level_map(const AlgebraicAction& a, const Word& s, const Lattice& c, std::uint64_t cap = 100'000);

/// The orbit of start + C under translation by the given vectors (default:
/// the standard basis), as canonical representatives in discovery order.
std::vector<ZVec> translation_orbit(const Lattice& c, const ZVec& start, const std::vector<ZVec>& generators = {});

struct CHReport {
  bool holds = true;
  int degree = 0;
  std::vector<BigInt> kappa;  // kappa_0, ..., kappa_d
  BigInt epsilon;             // kappa_d - sum of the others
  BigRat det_one_minus;       // det(I - sigma_s)
  bool epsilon_matches = false;
  std::size_t samples_checked = 0;
  std::optional<QVec> witness;
};
/// With kappa_d sigma^d = kappa_{d-1} sigma^{d-1} + ... + kappa_0 from the
/// characteristic polynomial, checks the module identity and the semidirect
/// identity s^d (kappa_d x) = (kappa_0 x) s (kappa_1 x) s ... (kappa_{d-1} x) s
/// on each sample (default: basis vectors and their sums), and
/// epsilon = kappa_d det(I - sigma_s).
CHReport verify_ch_identity(const AlgebraicAction& a, const Word& s, std::vector<QVec> samples = {});

/// gamma^d alpha^{kappa_d} == alpha^{kappa_0} gamma alpha^{kappa_1} gamma ... alpha^{kappa_{d-1}} gamma.
bool gamma_alpha_relation(const QMat& alpha, const QMat& gamma, const std::vector<BigInt>& kappa);

/// Primes dividing a denominator of sigma_w x.
std::set<BigInt> denominator_support(const AlgebraicAction& a, const Word& w, const ZVec& x);

}  // namespace algact
