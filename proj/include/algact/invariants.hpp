#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algact/modpoly.hpp"
#include "algact/poly.hpp"

namespace algact {

/// Rational canonical form data: the nontrivial invariant factors of zI - M.
struct ConjugacyClass {
  Eigen::Index dimension = 0;
  std::vector<QPoly> factors;
  friend bool operator==(const ConjugacyClass&, const ConjugacyClass&) = default;
};
ConjugacyClass conjugacy_class(const QMat& m);

/// Are a and b conjugate in GL_n(Q)?
bool q_conjugate(const QMat& a, const QMat& b);
inline bool q_conjugate(const ZMat& a, const ZMat& b) { return q_conjugate(to_rational(a), to_rational(b)); }

/// Multiplicative order of M, or nullopt when it is infinite. DomainError for
/// singular M.
std::optional<BigInt> torsion_order(const ZMat& m);

bool is_nilpotent(const QMat& m);
bool is_unipotent(const QMat& m);
/// log(1 + N) = N - N^2/2 + N^3/3 - ..., for unipotent alpha = 1 + N.
QMat unipotent_log(const QMat& alpha);
/// exp(N) = 1 + N + N^2/2! + ..., for nilpotent N.
QMat nilpotent_exp(const QMat& n);

struct RankBoundReport {
  Eigen::Index n = 0;
  Eigen::Index rank = 0;       // rank of the generated group, via logarithms
  Eigen::Index span_dim = 0;   // dimension of the span of all alpha - 1
  Eigen::Index kernel_dim = 0; // dimension of the common kernel of alpha - 1
  Eigen::Index bound = 0;      // n (n - kernel_dim)
  bool trivial = false;
  bool holds = false;          // rank <= span_dim < bound
};
/// For the group generated by pairwise commuting unipotent matrices.
/// DomainError for non-unipotent or non-commuting input.
RankBoundReport rank_bound_check(const std::vector<QMat>& generators);

struct PowerWitness {
  BigInt m;                    // kappa * (dim_bound)! - 1
  QMat eta;                    // alpha^m - 1
  bool nilpotent = false;
  int nilpotency_index = 0;    // least j with eta^j = 0
  std::string orientation;     // which form of the relation held
};
/// Given alpha = gamma alpha^kappa gamma^-1 (or gamma alpha gamma^-1 = alpha^kappa),
/// checks that alpha^m - 1 is nilpotent for m = kappa (dim_bound)! - 1.
/// DomainError when the relation fails or dim_bound > 10.
PowerWitness unipotent_power_witness(const QMat& alpha, long kappa, const QMat& gamma, int dim_bound);

struct DistinguisherVerdict {
  enum class Status { DistinguishedByDegree, DistinguishedAtPrime, Indistinguishable } status;
  std::optional<std::uint64_t> prime;
  SplitSignature sig_f, sig_g;
  std::uint64_t prime_bound = 0;
  std::string irreducibility;  // "decided" or "asserted"
};
std::string to_string(DistinguisherVerdict::Status s);

/// One-sided test that Q[z]/(f) and Q[z]/(g) are not isomorphic: the smallest
/// prime p <= bound at which both are squarefree mod p and the factorization
/// patterns differ. DomainError for non-monic, non-squarefree, or visibly
/// reducible input.
DistinguisherVerdict splitting_signature_distinguisher(const ZPoly& f, const ZPoly& g, std::uint64_t prime_bound = 200);

}  // namespace algact
