#include <algorithm>
#include <set>

#include "algact/charpoly.hpp"
#include "algact/cli.hpp"
#include "algact/groupoid.hpp"
#include "algact/invariants.hpp"

namespace algact::cli {

namespace {

template <typename T>
std::vector<std::string> strings(const std::vector<T>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

IdentitySummary identity_summary(const AlgebraicAction& a, std::size_t g) {
  const CHReport ch = verify_ch_identity(a, {{g, 1}});
  IdentitySummary s;
  s.generator = a.generators()[g].name;
  s.det = to_string(determinant(a.matrix(g)));
  s.holds = ch.holds;
  s.degree = ch.degree;
  s.kappa = strings(ch.kappa);
  s.epsilon = to_string(ch.epsilon);
  s.det_one_minus = to_string(ch.det_one_minus);
  s.epsilon_matches = ch.epsilon_matches;
  s.samples = ch.samples_checked;
  return s;
}

std::string factors_string(const ConjugacyClass& c) {
  std::string out;
  for (const QPoly& f : c.factors) out += (out.empty() ? "" : "; ") + f.to_string();
  return out;
}

void finish(CompareVerdict& v, const std::string& consistent_note) {
  const bool hyps = std::all_of(v.hypotheses.begin(), v.hypotheses.end(),
                                [](const Hypothesis& h) { return h.first && h.second; });
  const bool differs = std::any_of(v.evidence.begin(), v.evidence.end(),
                                   [](const Evidence& e) { return e.first != e.second; });
  if (!hyps) {
    v.status = "inconclusive";
    if (v.note.empty()) v.note = "a hypothesis of the cited statement fails, so no verdict is drawn";
  } else if (differs) {
    v.status = "distinguished";
    if (v.note.empty()) v.note = "the groupoids are not isomorphic";
  } else {
    if (v.status.empty()) v.status = "consistent";
    if (v.note.empty()) v.note = consistent_note;
  }
}

const std::string kConsistent = "no computed invariant separates the inputs; this does not certify isomorphism";

}  // namespace

AnalyzeReport analyze(const AlgebraicAction& a, int depth, int word_bound) {
  AnalyzeReport r;
  r.rank = static_cast<long>(a.rank());
  r.monoid = to_string(a.kind());
  for (const Generator& g : a.generators()) r.generators.push_back(g.name);
  r.depth = depth;
  r.word_bound = word_bound;

  const StandingReport st = check_standing(a, word_bound);
  r.finite_index = st.fi_holds;
  r.non_automorphic = st.non_automorphic;
  r.faithful_on_generators = st.faithful_on_generators;
  if (st.faithfulness_witness) r.faithfulness_witness = to_string(a, *st.faithfulness_witness);
  r.jf_note = st.jf_note;
  r.pc_note = st.pc_note;
  r.standing = st.fi_holds && st.non_automorphic && st.faithful_on_generators;

  const ConstructibleFamily fam = constructible_family(a, depth);
  r.family_size = fam.members.size();
  r.family_saturated = fam.saturated;
  r.family_truncated = fam.truncated;
  const std::set<BigInt> indices = index_set(fam);
  r.index_set = strings(std::vector<BigInt>(indices.begin(), indices.end()));

  const ExactnessReport ex = exactness(a, depth);
  r.exact = ex.criterion_exact ? to_string(*ex.criterion_exact) : to_string(Decision::Undetermined);
  r.exact_basis = ex.criterion_basis;
  if (ex.unimodular_factor) r.unimodular_factor = ex.unimodular_factor->to_string();
  r.intersection_index = strings(ex.intersection_index);
  r.intersection_index_increasing = ex.index_strictly_increasing;

  const ConditionFReport mix = check_condition_F(a, word_bound, true);
  const ConditionFReport f = check_condition_F(a, word_bound, false);
  if (mix.all_powers) {
    // A single generator: decided for every power by the eigenvalues.
    r.decided_for_all_powers = true;
    r.mixing = r.condition_f = *mix.all_powers;
    if (mix.root_of_unity_order) r.mixing_witness = r.condition_f_witness = "root of unity of order " +
                                                                           std::to_string(*mix.root_of_unity_order);
  } else {
    r.mixing = mix.holds;
    r.condition_f = f.holds;
  }
  if (mix.witness) r.mixing_witness = to_string(a, *mix.witness);
  if (f.witness) r.condition_f_witness = to_string(a, *f.witness);

  if (a.kind() != MonoidKind::FreeAbelian) {
    r.sf = "not applicable";
  } else {
    try {
      const SFReport sf = check_SF_via_det(a);
      r.sf = yes_no(sf.holds);
      r.sf_determinants = strings(sf.determinants);
      if (sf.kernel) r.sf_kernel = strings(*sf.kernel);
    } catch (const Inconclusive&) {
      r.sf = "inconclusive";
    }
  }

  r.identities_hold = true;
  for (std::size_t g = 0; g < a.size(); ++g) {
    r.identities.push_back(identity_summary(a, g));
    r.identities_hold = r.identities_hold && r.identities.back().holds && r.identities.back().epsilon_matches;
  }
  return r;
}

CompareVerdict compare_toral(const AlgebraicAction& a, const AlgebraicAction& b) {
  if (a.size() != 1) throw InputError("/generators", "toral mode needs a single generator in the first input");
  if (b.size() != 1) throw InputError("/generators", "toral mode needs a single generator in the second input");
  CompareVerdict v;
  v.mode = "toral";
  v.theorem_basis = kToralBasis;
  const ZMat& m = a.matrix(0);
  const ZMat& n = b.matrix(0);
  v.hypotheses.push_back({"|det| > 1", abs(determinant(m)) > 1, abs(determinant(n)) > 1});
  v.hypotheses.push_back({"no root-of-unity eigenvalue (mixing)", !has_root_of_unity_eigenvalue(m).has_value(),
                          !has_root_of_unity_eigenvalue(n).has_value()});
  v.evidence.push_back({"rank", std::to_string(m.rows()), std::to_string(n.rows())});
  v.evidence.push_back({"invariant factors over Q", factors_string(conjugacy_class(to_rational(m))),
                        factors_string(conjugacy_class(to_rational(n)))});
  finish(v, kConsistent);
  return v;
}

std::optional<ZPoly> defining_polynomial(const StructureRing& r) {
  const Eigen::Index n = r.rank();
  auto try_elem = [&](const ZVec& x) -> std::optional<ZPoly> {
    const ZPoly chi = charpoly(act_matrix(r, x));
    const QPoly q = to_rational(chi);
    if (gcd(q, q.derivative()).degree() == 0) return chi;
    return std::nullopt;
  };
  for (Eigen::Index i = 0; i < n; ++i)
    if (auto f = try_elem(r.basis(i))) return f;
  constexpr std::uint64_t kCap = 200'000;
  std::uint64_t tried = 0;
  for (long bound = 1; bound <= 3; ++bound) {
    std::vector<long> c(static_cast<std::size_t>(n), -bound);
    while (tried < kCap) {
      const long mx = std::abs(*std::max_element(c.begin(), c.end(), [](long x, long y) { return std::abs(x) < std::abs(y); }));
      if (mx == bound) {
        ZVec x(n);
        for (Eigen::Index i = 0; i < n; ++i) x(i) = c[static_cast<std::size_t>(i)];
        ++tried;
        if (auto f = try_elem(x)) return f;
      }
      std::size_t k = 0;
      while (k < c.size() && c[k] == bound) c[k++] = -bound;
      if (k == c.size()) break;
      ++c[k];
    }
  }
  return std::nullopt;
}

CompareVerdict compare_rings(const StructureRing& r, const StructureRing& s, std::uint64_t prime_bound) {
  CompareVerdict v;
  v.mode = "ring";
  v.theorem_basis = kRingBasis;
  const RingValidation vr = validate(r), vs = validate(s);
  v.hypotheses.push_back({"valid ring (associative, unital)", vr.valid(), vs.valid()});
  v.hypotheses.push_back({"regular elements span the ring", vr.valid(), vs.valid()});
  v.evidence.push_back({"rank", std::to_string(r.rank()), std::to_string(s.rank())});
  v.evidence.push_back({"commutative", yes_no(vr.commutative), yes_no(vs.commutative)});
  const bool same_shape = r.rank() == s.rank() && vr.commutative == vs.commutative;
  if (same_shape && vr.valid() && vs.valid()) {
    if (!vr.commutative) {
      v.status = "inconclusive";
      v.note = "non-commutative rational algebras of equal rank are not compared further";
    } else {
      const auto f = defining_polynomial(r), g = defining_polynomial(s);
      if (!f || !g) {
        v.status = "inconclusive";
        v.note = "no primitive element with squarefree characteristic polynomial was found";
      } else {
        const std::string defining = "defining polynomials " + f->to_string() + " and " + g->to_string() + "; ";
        try {
          const DistinguisherVerdict d = splitting_signature_distinguisher(*f, *g, prime_bound);
          if (d.status == DistinguisherVerdict::Status::DistinguishedAtPrime) {
            v.evidence.push_back({"splitting signature at p = " + std::to_string(*d.prime), to_string(d.sig_f),
                                  to_string(d.sig_g)});
            v.note = defining + "distinguished at p = " + std::to_string(*d.prime);
          } else {
            v.evidence.push_back({"splitting signatures for p <= " + std::to_string(prime_bound),
                                  to_string(d.status), to_string(d.status)});
            v.note = defining + "indistinguishable for p <= " + std::to_string(prime_bound) + "; " + kConsistent;
          }
        } catch (const DomainError& e) {
          v.status = "inconclusive";
          v.note = defining + "outside the distinguisher's domain: " + e.what();
        }
      }
    }
  }
  finish(v, kConsistent);
  return v;
}

CompareVerdict compare_ideals(const IdealSpec& i, const IdealSpec& j) {
  CompareVerdict v;
  v.mode = "poly";
  v.theorem_basis = kPolyBasis;
  const CommAlgReport ri = commalg_conditions(i.gens, i.vars, i.order);
  const CommAlgReport rj = commalg_conditions(j.gens, j.vars, j.order);
  v.hypotheses.push_back({"(a) finite variety, no variable in the ideal", ri.a == Decision::Yes, rj.a == Decision::Yes});
  v.hypotheses.push_back({"(b) no coordinate vanishes on the variety", ri.b == Decision::Yes, rj.b == Decision::Yes});
  v.hypotheses.push_back({"(c) a monomial avoids 1 on the variety", ri.c == Decision::Yes, rj.c == Decision::Yes});
  v.hypotheses.push_back({"(d) exclusive prime per variable norm", ri.d == Decision::Yes, rj.d == Decision::Yes});
  v.evidence.push_back({"variables", std::to_string(i.vars.size()), std::to_string(j.vars.size())});
  v.evidence.push_back({"rank", std::to_string(ri.dim), std::to_string(rj.dim)});
  if (ri.zero_dimensional && rj.zero_dimensional && ri.dim > 0 && rj.dim > 0) {
    auto classes = [](const IdealSpec& s) {
      const QuotientAlgebra qa = quotient_algebra(s.gens, s.order);
      std::vector<std::string> out;
      for (std::size_t k = 0; k < qa.nvars(); ++k) out.push_back("[" + factors_string(conjugacy_class(qa.T(k))) + "]");
      std::sort(out.begin(), out.end());
      std::string joined;
      for (const auto& c : out) joined += (joined.empty() ? "" : " ") + c;
      return joined;
    };
    auto norms = [](const CommAlgReport& r) {
      std::vector<BigRat> n = r.norms;
      std::sort(n.begin(), n.end());
      std::string out;
      for (const auto& x : n) out += (out.empty() ? "" : ", ") + to_string(x);
      return out;
    };
    v.evidence.push_back({"variable norms", norms(ri), norms(rj)});
    v.evidence.push_back({"invariant factors of the variables", classes(i), classes(j)});
  }
  finish(v, kConsistent);
  return v;
}

GroupoidRun groupoid_level(const AlgebraicAction& a, const Lattice& level, int depth) {
  if (level.rank() != a.rank()) throw InputError("--level", "rank does not match the action");
  const ConstructibleFamily fam = constructible_family(a, depth);
  if (std::find(fam.members.begin(), fam.members.end(), level) == fam.members.end())
    throw InputError("--level", to_string(level) + " is not constructible at depth " + std::to_string(depth));
  GroupoidRun run;
  GroupoidReport& r = run.report;
  const QuotientLevel q(level);
  r.level = to_string(level);
  r.order = to_string(q.order());
  r.cyclic_factors = strings(q.cyclic_factors());
  r.depth = depth;
  r.family_size = fam.members.size();

  auto coset = [](const ZVec& x) {
    std::vector<std::string> out;
    for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back(to_string(x(i)));
    return out;
  };
  for (std::size_t g = 0; g < a.size(); ++g) {
    const LevelMap lm = level_map(a, {{g, 1}}, level);
    const std::string name = a.generators()[g].name;
    r.level_maps.push_back({name, to_string(lm.source), to_string(lm.target), lm.table.size(), to_string(lm.image_size),
                            to_string(lm.image_codim)});
    for (const auto& [x, y] : lm.table)
      run.trace.push_back({name, coset(x), to_string(lm.source), coset(y), to_string(lm.target)});
  }

  const std::vector<ZVec> orbit = translation_orbit(level, ZVec::Zero(a.rank()));
  r.orbit_size = orbit.size();
  r.orbit_covers = BigInt(orbit.size()) == q.order();
  for (const ZVec& x : orbit)
    for (Eigen::Index i = 0; i < a.rank(); ++i) {
      ZVec e = ZVec::Zero(a.rank());
      e(i) = 1;
      run.trace.push_back({"+e" + std::to_string(i + 1), coset(x), r.level, coset(q.reduce(ZVec(x + e))), r.level});
    }

  r.identities_hold = true;
  for (std::size_t g = 0; g < a.size(); ++g) {
    r.identities.push_back(identity_summary(a, g));
    r.identities_hold = r.identities_hold && r.identities.back().holds && r.identities.back().epsilon_matches;
  }
  return run;
}

PolyidealReport polyideal(const IdealSpec& s) {
  PolyidealReport r;
  r.vars = s.vars;
  r.order = to_string(s.order);
  for (const MPoly& g : buchberger(s.gens, s.order)) r.groebner_basis.push_back(g.to_string(s.vars));
  const CommAlgReport c = commalg_conditions(s.gens, s.vars, s.order);
  r.zero_dimensional = c.zero_dimensional;
  r.dim = c.dim;
  for (const Exponent& e : c.staircase) r.staircase.push_back(MPoly::monomial(e).to_string(s.vars));
  r.a = to_string(c.a);
  for (std::size_t k : c.vars_in_ideal) r.vars_in_ideal.push_back(s.vars[k]);
  r.b = to_string(c.b);
  r.det_T = strings(c.det_T);
  r.c = to_string(c.c);
  r.c_bound = c.c_bound;
  if (c.c_witness) r.c_witness = MPoly::monomial(*c.c_witness).to_string(s.vars);
  if (c.c_det) r.c_det = to_string(*c.c_det);
  r.d = to_string(c.d);
  r.norms = strings(c.norms);
  for (const auto& p : c.d_primes) r.d_primes.push_back(p ? to_string(*p) : "");
  r.d_note = c.d_note;
  for (std::size_t k = 0; k < c.chi.size(); ++k) r.chi.push_back(c.chi[k].to_string("z"));
  r.gap_note = c.gap_note;
  return r;
}

}  // namespace algact::cli
