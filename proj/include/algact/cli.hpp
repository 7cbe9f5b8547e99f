#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "algact/action.hpp"
#include "algact/errors.hpp"
#include "algact/lattice.hpp"
#include "algact/orders.hpp"
#include "algact/polyring.hpp"

namespace algact::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::uint64_t kDefaultPrimeBound = 200;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInvariant = 3;

/// Bad input. `pointer` is a JSON pointer into the offending document, or a
/// flag name for command-line values.
class InputError : public Error {
 public:
  InputError(std::string pointer, std::string detail)
      : Error((pointer.empty() ? std::string("(root)") : pointer) + ": " + detail),
        pointer_(std::move(pointer)),
        detail_(std::move(detail)) {}
  const std::string& pointer() const { return pointer_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string pointer_;
  std::string detail_;
};

// ---- input schemas ------------------------------------------------------

/// Reads a file, or stdin for "-".
nlohmann::json read_json(const std::string& path);

/// {"schema": 1, "rank": n, "generators": [{"name", "matrix"}], "monoid"}.
/// Matrices are row-major, either nested rows or a flat list of n^2 entries.
/// Integers may be JSON numbers or decimal strings. `monoid` defaults to
/// "free-abelian".
AlgebraicAction parse_action(const nlohmann::json& j);
nlohmann::json action_to_json(const AlgebraicAction& a);

struct IdealSpec {
  std::vector<std::string> vars;
  std::vector<MPoly> gens;
  MonomialOrder order = MonomialOrder::DegRevLex;
};
/// {"schema": 1, "vars": [...], "gens": ["u^2 - 2", ...], "order": "degrevlex"}.
IdealSpec parse_ideal(const nlohmann::json& j);
nlohmann::json ideal_to_json(const IdealSpec& s);

/// {"schema": 1, "rank", "constants": flat n^3 list, "unit"}, or
/// {"schema": 1, "preset": name}, or {"schema": 1, "polynomial": [c0, ..., cn]}.
StructureRing parse_ring(const nlohmann::json& j);
nlohmann::json ring_to_json(const StructureRing& r);

/// Rows separated by ';', entries by ','. A single integer k means k Z^n.
Lattice parse_level(const std::string& text, Eigen::Index rank);

// ---- reports -------------------------------------------------------------

struct IdentitySummary {
  std::string generator;
  std::string det;
  bool holds = false;
  int degree = 0;
  std::vector<std::string> kappa;
  std::string epsilon;
  std::string det_one_minus;
  bool epsilon_matches = false;
  std::size_t samples = 0;
  friend bool operator==(const IdentitySummary&, const IdentitySummary&) = default;
};

struct AnalyzeReport {
  int schema = kSchemaVersion;
  long rank = 0;
  std::string monoid;
  std::vector<std::string> generators;
  int depth = 0;
  int word_bound = 0;

  bool standing = false;
  bool finite_index = false;
  bool non_automorphic = false;
  bool faithful_on_generators = false;
  std::string faithfulness_witness;
  std::string jf_note;
  std::string pc_note;

  std::size_t family_size = 0;
  bool family_saturated = false;
  bool family_truncated = false;
  std::vector<std::string> index_set;

  std::string exact;  // yes, no, undetermined
  std::string exact_basis;
  std::string unimodular_factor;
  std::vector<std::string> intersection_index;
  bool intersection_index_increasing = false;

  bool mixing = false;
  std::string mixing_witness;
  bool condition_f = false;
  std::string condition_f_witness;
  bool decided_for_all_powers = false;

  std::string sf;  // yes, no, inconclusive, not applicable
  std::vector<std::string> sf_determinants;
  std::vector<std::string> sf_kernel;

  std::vector<IdentitySummary> identities;
  bool identities_hold = false;

  friend bool operator==(const AnalyzeReport&, const AnalyzeReport&) = default;
};
AnalyzeReport analyze(const AlgebraicAction& a, int depth = kDefaultDepth, int word_bound = kDefaultWordBound);

struct Evidence {
  std::string invariant;
  std::string first;
  std::string second;
  friend bool operator==(const Evidence&, const Evidence&) = default;
};
struct Hypothesis {
  std::string name;
  bool first = false;
  bool second = false;
  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

/// Non-isomorphism certificate. "distinguished" requires every hypothesis to
/// hold on both sides and some evidence pair to differ; "consistent" only
/// says no computed invariant separates the inputs.
struct CompareVerdict {
  int schema = kSchemaVersion;
  std::string mode;
  std::string status;  // distinguished, consistent, inconclusive
  std::vector<Hypothesis> hypotheses;
  std::vector<Evidence> evidence;
  std::string theorem_basis;
  std::string note;
  friend bool operator==(const CompareVerdict&, const CompareVerdict&) = default;
};

inline const std::string kToralBasis =
    "toral endomorphisms with |det| > 1 and no root-of-unity eigenvalue: isomorphic groupoids force equal rank "
    "and conjugacy over Q";
inline const std::string kRingBasis =
    "finitely generated torsion-free rings: isomorphic groupoids force isomorphic rational algebras";
inline const std::string kPolyBasis =
    "zero-dimensional ideals satisfying (a)-(d): isomorphic groupoids force isomorphic actions, hence equal "
    "variable count, equal rank and Q-conjugate multiplication matrices up to a permutation of the variables";

/// Single-generator actions. InputError when either side has more than one generator.
CompareVerdict compare_toral(const AlgebraicAction& a, const AlgebraicAction& b);
CompareVerdict compare_rings(const StructureRing& r, const StructureRing& s,
                             std::uint64_t prime_bound = kDefaultPrimeBound);
CompareVerdict compare_ideals(const IdealSpec& i, const IdealSpec& j);

/// A primitive element of Q (x) R with squarefree characteristic polynomial,
/// searched over small coefficient vectors; empty when none is found.
std::optional<ZPoly> defining_polynomial(const StructureRing& r);

struct LevelMapSummary {
  std::string generator;
  std::string source;
  std::string target;
  std::size_t entries = 0;
  std::string image_size;
  std::string image_codim;
  friend bool operator==(const LevelMapSummary&, const LevelMapSummary&) = default;
};

struct GroupoidReport {
  int schema = kSchemaVersion;
  std::string level;
  std::string order;
  std::vector<std::string> cyclic_factors;
  int depth = 0;
  std::size_t family_size = 0;
  std::vector<LevelMapSummary> level_maps;
  std::size_t orbit_size = 0;
  bool orbit_covers = false;
  std::vector<IdentitySummary> identities;
  bool identities_hold = false;
  friend bool operator==(const GroupoidReport&, const GroupoidReport&) = default;
};

/// One arrow of the trace: a generator or a translation moving a coset.
struct Arrow {
  std::string arrow;
  std::vector<std::string> source;
  std::string source_level;
  std::vector<std::string> target;
  std::string target_level;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct GroupoidRun {
  GroupoidReport report;
  std::vector<Arrow> trace;
};
/// InputError when `level` is not in the constructible family at this depth.
GroupoidRun groupoid_level(const AlgebraicAction& a, const Lattice& level, int depth = kDefaultDepth);

struct PolyidealReport {
  int schema = kSchemaVersion;
  std::vector<std::string> vars;
  std::string order;
  std::vector<std::string> groebner_basis;
  bool zero_dimensional = false;
  std::size_t dim = 0;
  std::vector<std::string> staircase;
  std::string a;
  std::vector<std::string> vars_in_ideal;
  std::string b;
  std::vector<std::string> det_T;
  std::string c;
  int c_bound = 0;
  std::string c_witness;
  std::string c_det;
  std::string d;
  std::vector<std::string> norms;
  std::vector<std::string> d_primes;  // empty string where no exclusive prime was found
  std::string d_note;
  std::vector<std::string> chi;
  std::string gap_note;
  friend bool operator==(const PolyidealReport&, const PolyidealReport&) = default;
};
PolyidealReport polyideal(const IdealSpec& s);

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(IdentitySummary, generator, det, holds, degree, kappa, epsilon, det_one_minus,
                                   epsilon_matches, samples)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AnalyzeReport, schema, rank, monoid, generators, depth, word_bound, standing,
                                   finite_index, non_automorphic, faithful_on_generators, faithfulness_witness, jf_note,
                                   pc_note, family_size, family_saturated, family_truncated, index_set, exact,
                                   exact_basis, unimodular_factor, intersection_index, intersection_index_increasing,
                                   mixing, mixing_witness, condition_f, condition_f_witness, decided_for_all_powers, sf,
                                   sf_determinants, sf_kernel, identities, identities_hold)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Evidence, invariant, first, second)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Hypothesis, name, first, second)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CompareVerdict, schema, mode, status, hypotheses, evidence, theorem_basis, note)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LevelMapSummary, generator, source, target, entries, image_size, image_codim)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(GroupoidReport, schema, level, order, cyclic_factors, depth, family_size, level_maps,
                                   orbit_size, orbit_covers, identities, identities_hold)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Arrow, arrow, source, source_level, target, target_level)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PolyidealReport, schema, vars, order, groebner_basis, zero_dimensional, dim,
                                   staircase, a, vars_in_ideal, b, det_T, c, c_bound, c_witness, c_det, d, norms,
                                   d_primes, d_note, chi, gap_note)

std::string render(const AnalyzeReport& r);
std::string render(const CompareVerdict& v);
std::string render(const GroupoidReport& r);
std::string render(const PolyidealReport& r);

// ---- commands ----------------------------------------------------------------

struct AnalyzeOptions {
  std::string input;
  int depth = kDefaultDepth;
  int word_bound = kDefaultWordBound;
  bool json = false;
};
struct CompareOptions {
  std::string first;
  std::string second;
  std::string mode = "toral";
  std::uint64_t prime_bound = kDefaultPrimeBound;
  bool json = false;
};
struct GroupoidOptions {
  std::string input;
  std::string level;
  int depth = kDefaultDepth;
  std::string trace;  // output path, empty for none
  bool json = false;
};
struct PolyidealOptions {
  std::string input;
  bool json = false;
};

/// Each returns the process exit code: 0, kExitInput or kExitInvariant.
int run_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err);
int run_compare(const CompareOptions& o, std::ostream& out, std::ostream& err);
int run_groupoid(const GroupoidOptions& o, std::ostream& out, std::ostream& err);
int run_polyideal(const PolyidealOptions& o, std::ostream& out, std::ostream& err);

}  // namespace algact::cli
