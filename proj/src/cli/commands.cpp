#include <fstream>
#include <ostream>
#include <sstream>

#include "algact/cli.hpp"

namespace algact::cli {

namespace {

const char* mark(bool b) { return b ? "✓" : "✗"; }

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

std::string decision_mark(const std::string& d) {
  if (d == "yes") return "✓";
  if (d == "no") return "✗";
  return "?";
}

void render_identities(std::ostringstream& s, const std::vector<IdentitySummary>& ids) {
  for (const auto& i : ids)
    s << "  " << i.generator << ": det " << i.det << ", kappa (" << join(i.kappa) << "), epsilon " << i.epsilon
      << ", det(1 - s) " << i.det_one_minus << ", identity " << mark(i.holds) << ", epsilon check "
      << mark(i.epsilon_matches) << " (" << i.samples << " samples)\n";
}

template <typename Report, typename Compute>
int run(bool json, std::ostream& out, std::ostream& err, Compute compute, bool (*clean)(const Report&)) {
  try {
    const Report r = compute();
    if (json) out << nlohmann::json(r).dump(2) << "\n";
    else out << render(r);
    if (!clean(r)) {
      err << "error: an identity check failed\n";
      return kExitInvariant;
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "input error at " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitInput;
}

/// Reads and parses one input, prefixing error pointers with the file name.
template <typename Parse>
auto load(const std::string& path, Parse parse) {
  try {
    return parse(read_json(path));
  } catch (const InputError& e) {
    throw InputError((path == "-" ? "<stdin>" : path) + "#" + e.pointer(), e.detail());
  }
}

template <typename Report>
bool always(const Report&) {
  return true;
}

}  // namespace

std::string render(const AnalyzeReport& r) {
  std::ostringstream s;
  s << "action: rank " << r.rank << ", " << r.monoid << " monoid on " << join(r.generators) << "\n";
  s << "standing " << mark(r.standing) << "  (finite index " << mark(r.finite_index) << ", non-automorphic "
    << mark(r.non_automorphic) << ", faithful on generators " << mark(r.faithful_on_generators) << ")\n";
  if (!r.faithfulness_witness.empty()) s << "  trivially acting word: " << r.faithfulness_witness << "\n";
  s << "  (JF) " << r.jf_note << "\n  (PC) " << r.pc_note << "\n";
  s << "constructible family to depth " << r.depth << ": " << r.family_size << " members"
    << (r.family_saturated ? ", saturated" : "") << (r.family_truncated ? ", truncated" : "") << "\n";
  s << "  indices: {" << join(r.index_set) << "}\n";
  s << "exact: " << r.exact << " " << decision_mark(r.exact) << "  (" << r.exact_basis << ")\n";
  if (!r.unimodular_factor.empty()) s << "  unimodular factor: " << r.unimodular_factor << "\n";
  s << "  intersection indices by depth: " << join(r.intersection_index) << "\n";
  s << "mixing " << mark(r.mixing) << (r.mixing_witness.empty() ? "" : "  (witness: " + r.mixing_witness + ")") << "\n";
  s << "(F) " << mark(r.condition_f)
    << (r.condition_f_witness.empty() ? "" : "  (witness: " + r.condition_f_witness + ")")
    << (r.decided_for_all_powers ? "  decided for all powers" : "  words up to length " + std::to_string(r.word_bound))
    << "\n";
  s << "(SF) " << r.sf << " " << decision_mark(r.sf);
  if (!r.sf_determinants.empty()) s << "  (determinants " << join(r.sf_determinants) << ")";
  if (!r.sf_kernel.empty()) s << "  kernel (" << join(r.sf_kernel) << ")";
  s << "\nidentities " << mark(r.identities_hold) << "\n";
  render_identities(s, r.identities);
  return s.str();
}

std::string render(const CompareVerdict& v) {
  std::ostringstream s;
  s << v.mode << " mode: " << v.status << "\n";
  s << "basis: " << v.theorem_basis << "\n";
  for (const auto& h : v.hypotheses) s << "  hypothesis " << h.name << ": " << mark(h.first) << " " << mark(h.second) << "\n";
  for (const auto& e : v.evidence)
    s << "  " << e.invariant << ": " << e.first << " | " << e.second << (e.first != e.second ? "  (differs)" : "") << "\n";
  s << v.note << "\n";
  return s.str();
}

std::string render(const GroupoidReport& r) {
  std::ostringstream s;
  s << "level " << r.level << ": order " << r.order << ", cyclic factors (" << join(r.cyclic_factors) << ")\n";
  s << "constructible at depth " << r.depth << " (" << r.family_size << " family members)\n";
  for (const auto& m : r.level_maps)
    s << "  level map " << m.generator << ": mod " << m.source << " -> mod " << m.target << ", " << m.entries
      << " entries, image " << m.image_size << ", codimension " << m.image_codim << "\n";
  s << "translation orbit: " << r.orbit_size << " cosets, covers " << mark(r.orbit_covers) << "\n";
  s << "identities " << mark(r.identities_hold) << "\n";
  render_identities(s, r.identities);
  return s.str();
}

std::string render(const PolyidealReport& r) {
  std::ostringstream s;
  s << "ideal in Z[" << join(r.vars) << "], " << r.order << "\n";
  s << "groebner basis: " << join(r.groebner_basis, "; ") << "\n";
  if (r.zero_dimensional)
    s << "dimension " << r.dim << ", staircase {" << join(r.staircase) << "}\n";
  else
    s << "not zero-dimensional\n";
  s << "(a) " << decision_mark(r.a) << (r.vars_in_ideal.empty() ? "" : "  variables in the ideal: " + join(r.vars_in_ideal))
    << (r.zero_dimensional ? "" : "  infinite variety") << "\n";
  if (r.zero_dimensional) {
    s << "(b) " << decision_mark(r.b) << "  det T: " << join(r.det_T) << "\n";
    s << "(c) " << decision_mark(r.c);
    if (!r.c_witness.empty()) s << "  monomial " << r.c_witness << ", det(1 - T) = " << r.c_det;
    else s << "  no monomial of degree <= " << r.c_bound;
    s << "\n(d) " << decision_mark(r.d) << "  norms " << join(r.norms);
    std::vector<std::string> primes;
    for (std::size_t k = 0; k < r.d_primes.size(); ++k)
      primes.push_back(r.vars[k] + ": " + (r.d_primes[k].empty() ? "none" : r.d_primes[k]));
    s << ", exclusive primes " << join(primes) << "\n";
    if (!r.d_note.empty()) s << "  " << r.d_note << "\n";
    for (std::size_t k = 0; k < r.chi.size(); ++k) s << "  chi_" << r.vars[k] << " = " << r.chi[k] << "\n";
    s << "  note: " << r.gap_note << "\n";
  }
  return s.str();
}

int run_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
  return run<AnalyzeReport>(
      o.json, out, err, [&] { return analyze(load(o.input, parse_action), o.depth, o.word_bound); },
      +[](const AnalyzeReport& r) { return r.identities_hold; });
}

int run_compare(const CompareOptions& o, std::ostream& out, std::ostream& err) {
  return run<CompareVerdict>(
      o.json, out, err,
      [&] {
        if (o.first == "-" && o.second == "-") throw InputError("", "only one input can be read from stdin");
        if (o.mode == "toral") return compare_toral(load(o.first, parse_action), load(o.second, parse_action));
        if (o.mode == "ring")
          return compare_rings(load(o.first, parse_ring), load(o.second, parse_ring), o.prime_bound);
        if (o.mode == "poly") return compare_ideals(load(o.first, parse_ideal), load(o.second, parse_ideal));
        throw InputError("--mode", "expected toral, ring or poly");
      },
      &always<CompareVerdict>);
}

int run_groupoid(const GroupoidOptions& o, std::ostream& out, std::ostream& err) {
  return run<GroupoidReport>(
      o.json, out, err,
      [&] {
        const AlgebraicAction a = load(o.input, parse_action);
        const GroupoidRun g = groupoid_level(a, parse_level(o.level, a.rank()), o.depth);
        if (!o.trace.empty()) {
          std::ofstream f(o.trace);
          if (!f) throw InputError("--trace", "cannot write '" + o.trace + "'");
          f << nlohmann::json(g.trace).dump(1) << "\n";
        }
        return g.report;
      },
      +[](const GroupoidReport& r) { return r.identities_hold; });
}

int run_polyideal(const PolyidealOptions& o, std::ostream& out, std::ostream& err) {
  return run<PolyidealReport>(
      o.json, out, err, [&] { return polyideal(load(o.input, parse_ideal)); }, &always<PolyidealReport>);
}

}  // namespace algact::cli
