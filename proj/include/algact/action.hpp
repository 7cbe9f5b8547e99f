#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "algact/lattice.hpp"
#include "algact/unit_factor.hpp"

namespace algact {

enum class MonoidKind { Free, FreeAbelian };
std::string to_string(MonoidKind k);

struct Generator {
  std::string name;
  ZMat matrix;
};

/// A finitely generated monoid acting on Z^n by nonsingular integer matrices
/// (column vectors). Generators of a free-abelian monoid must commute.
class AlgebraicAction {
 public:
  AlgebraicAction(Eigen::Index rank, std::vector<Generator> gens, MonoidKind kind = MonoidKind::FreeAbelian);
  static AlgebraicAction single(const ZMat& m, const std::string& name = "s");

  Eigen::Index rank() const { return rank_; }
  MonoidKind kind() const { return kind_; }
  std::size_t size() const { return gens_.size(); }
  const std::vector<Generator>& generators() const { return gens_; }
  const ZMat& matrix(std::size_t i) const { return gens_.at(i).matrix; }

 private:
  Eigen::Index rank_;
  std::vector<Generator> gens_;
  MonoidKind kind_;
};

/// A word in the generators and their inverses. Monoid words have only
/// positive exponents.
struct Letter {
  std::size_t gen;
  long exp;
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

/// Merges adjacent letters and drops zero exponents; for a free-abelian
/// action the result is sorted by generator (an exponent vector).
Word normalize(const AlgebraicAction& a, Word w);
bool is_monoid_word(const Word& w);
/// sigma_w = product of the letter matrices, leftmost letter applied last.
QMat evaluate(const AlgebraicAction& a, const Word& w);
/// Integer matrix of a monoid word; DomainError on negative exponents.
ZMat evaluate_monoid(const AlgebraicAction& a, const Word& w);
std::string to_string(const AlgebraicAction& a, const Word& w);

inline constexpr int kDefaultWordBound = 6;
inline constexpr int kDefaultDepth = 4;

struct StandingReport {
  bool fi_holds = false;
  bool non_automorphic = false;
  bool faithful_on_generators = false;
  int faithful_word_bound = 0;
  std::optional<Word> faithfulness_witness;  // a nontrivial word acting trivially
  std::string jf_note;
  std::string pc_note;
};
StandingReport check_standing(const AlgebraicAction& a, int word_bound = kDefaultWordBound);

/// How a family member was obtained from earlier members.
struct Derivation {
  enum class Op { Start, Image, Preimage, Intersect } op = Op::Start;
  std::size_t gen = 0;
  std::size_t lhs = 0, rhs = 0;  // parent members
};

struct ConstructibleFamily {
  std::vector<Lattice> members;
  std::vector<Derivation> derivations;
  std::vector<int> round;                                     // round in which each member first appeared
  std::vector<std::pair<std::size_t, std::size_t>> inclusions;  // (i, j): member i is inside member j, i != j
  bool saturated = false;
  bool truncated = false;  // member cap reached
  int depth = 0;
};

inline constexpr std::size_t kFamilyCap = 2000;

/// Closure of {Z^n} under the images and preimages of the generators and
/// pairwise intersection, one round per unit of depth.
ConstructibleFamily constructible_family(const AlgebraicAction& a, int depth, std::size_t cap = kFamilyCap);
/// Recomputes member i from its derivation record.
Lattice replay(const AlgebraicAction& a, const ConstructibleFamily& f, std::size_t i);
std::set<BigInt> index_set(const AlgebraicAction& a, int depth);
std::set<BigInt> index_set(const ConstructibleFamily& f);

/// The smallest k such that M has a primitive k-th root of unity as an
/// eigenvalue, if any.
std::optional<int> has_root_of_unity_eigenvalue(const ZMat& m);

struct ConditionFReport {
  bool holds = true;
  int word_bound = 0;
  std::size_t words_checked = 0;
  std::optional<Word> witness;  // det(I - sigma_w) = 0
  /// For a single generator: whether the condition holds for every power,
  /// decided by the absence of root-of-unity eigenvalues.
  std::optional<bool> all_powers;
  std::optional<int> root_of_unity_order;
};
/// det(I - sigma_w) != 0 for nontrivial words w up to the bound. Group words
/// by default; `monoid_only` restricts to positive exponents (the mixing
/// test for the dual action).
ConditionFReport check_condition_F(const AlgebraicAction& a, int word_bound = kDefaultWordBound,
                                   bool monoid_only = false);

struct SFReport {
  bool holds = false;
  std::vector<BigInt> determinants;
  std::optional<std::vector<BigInt>> kernel;  // primitive exponent vector with product of dets = +-1
};
/// Injectivity of k -> prod det(M_i)^k_i on Z^m. Only free-abelian actions.
/// Throws Inconclusive when a determinant cannot be factored by trial division.
SFReport check_SF_via_det(const AlgebraicAction& a);

struct ExactnessReport {
  // Empirical part, one entry per depth 0..depth.
  std::vector<BigInt> intersection_index;
  std::vector<BigInt> intersection_min_divisor;  // smallest elementary divisor
  bool index_strictly_increasing = false;
  bool min_divisor_bounded = false;  // constant over the last half of the depths
  // Criterion part, single generator only.
  std::optional<Decision> criterion_exact;
  std::optional<ZPoly> unimodular_factor;
  std::vector<CyclotomicPart> cyclotomic_factors;
  std::string criterion_basis;
};
ExactnessReport exactness(const AlgebraicAction& a, int depth = kDefaultDepth);

}  // namespace algact
