#include "algact/action.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "algact/charpoly.hpp"
#include "algact/normal_form.hpp"
#include "algact/number_theory.hpp"

namespace algact {

namespace {

using Key = std::vector<BigRat>;

Key key_of(const QMat& m) { return Key(m.data(), m.data() + m.size()); }

// Exponent vectors of length m with sum |k_i| = total. With `signed_` the
// first nonzero entry is positive (one per pair +-k); otherwise all k_i >= 0.
void for_each_exponent_vector(std::size_t m, long total, bool signed_,
                              const std::function<bool(const std::vector<long>&)>& visit) {
  std::vector<long> k(m, 0);
  std::function<bool(std::size_t, long, bool)> rec = [&](std::size_t i, long left, bool seen_nonzero) -> bool {
    if (i == m) return left == 0 ? visit(k) : true;
    for (long v = left; v >= (signed_ ? -left : 0); --v) {
      if (signed_ && !seen_nonzero && v < 0) continue;
      k[i] = v;
      if (!rec(i + 1, left - std::abs(v), seen_nonzero || v != 0)) return false;
    }
    k[i] = 0;
    return true;
  };
  rec(0, total, false);
}

// Reduced words of exact length `len` in m free generators (inverses too
// unless monoid_only), as sequences of unit letters.
void for_each_free_word(std::size_t m, int len, bool monoid_only, const std::function<bool(const Word&)>& visit) {
  Word w;
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(w.size()) == len) return visit(w);
    for (std::size_t g = 0; g < m; ++g)
      for (long e : {1L, -1L}) {
        if (monoid_only && e < 0) continue;
        if (!w.empty() && w.back().gen == g && w.back().exp == -e) continue;
        w.push_back({g, e});
        const bool go = rec();
        w.pop_back();
        if (!go) return false;
      }
    return true;
  };
  rec();
}

Word word_from_exponents(const std::vector<long>& k) {
  Word w;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] != 0) w.push_back({i, k[i]});
  return w;
}

Word inverse_word(Word w) {
  std::reverse(w.begin(), w.end());
  for (auto& l : w) l.exp = -l.exp;
  return w;
}

bool commute(const ZMat& a, const ZMat& b) { return a * b == b * a; }

}  // namespace

std::string to_string(MonoidKind k) { return k == MonoidKind::Free ? "free" : "free-abelian"; }

AlgebraicAction::AlgebraicAction(Eigen::Index rank, std::vector<Generator> gens, MonoidKind kind)
    : rank_(rank), gens_(std::move(gens)), kind_(kind) {
  if (rank_ < 1) throw DomainError("action rank must be positive");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& g = gens_[i];
    if (g.matrix.rows() != rank_ || g.matrix.cols() != rank_)
      throw DomainError("generator '" + g.name + "' is not " + std::to_string(rank_) + "x" + std::to_string(rank_));
    if (determinant(g.matrix) == 0) throw DomainError("generator '" + g.name + "' is singular");
    for (std::size_t j = 0; j < i; ++j) {
      if (gens_[j].name == g.name) throw DomainError("duplicate generator name '" + g.name + "'");
      if (kind_ == MonoidKind::FreeAbelian && !commute(gens_[j].matrix, g.matrix))
        throw DomainError("generators '" + gens_[j].name + "' and '" + g.name + "' do not commute");
    }
  }
}

AlgebraicAction AlgebraicAction::single(const ZMat& m, const std::string& name) {
  require_square(m, "single");
  return AlgebraicAction(m.rows(), {{name, m}}, MonoidKind::FreeAbelian);
}

Word normalize(const AlgebraicAction& a, Word w) {
  for (const auto& l : w)
    if (l.gen >= a.size()) throw DomainError("word refers to generator " + std::to_string(l.gen) + " which does not exist");
  if (a.kind() == MonoidKind::FreeAbelian) {
    std::vector<long> k(a.size(), 0);
    for (const auto& l : w) k[l.gen] += l.exp;
    return word_from_exponents(k);
  }
  Word out;
  for (const auto& l : w) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

bool is_monoid_word(const Word& w) {
  return std::all_of(w.begin(), w.end(), [](const Letter& l) { return l.exp >= 0; });
}

QMat evaluate(const AlgebraicAction& a, const Word& w) {
  QMat m = identity<BigRat>(a.rank());
  for (const auto& l : w) {
    if (l.gen >= a.size()) throw DomainError("word refers to a missing generator");
    m = m * power(to_rational(a.matrix(l.gen)), l.exp);
  }
  return m;
}

ZMat evaluate_monoid(const AlgebraicAction& a, const Word& w) {
  if (!is_monoid_word(w)) throw DomainError("word has a negative exponent");
  ZMat m = identity<BigInt>(a.rank());
  for (const auto& l : w) {
    if (l.gen >= a.size()) throw DomainError("word refers to a missing generator");
    m = m * power(a.matrix(l.gen), static_cast<unsigned long>(l.exp));
  }
  return m;
}

std::string to_string(const AlgebraicAction& a, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += " ";
    out += a.generators().at(l.gen).name;
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

StandingReport check_standing(const AlgebraicAction& a, int word_bound) {
  StandingReport r;
  r.fi_holds = true;
  for (const auto& g : a.generators()) {
    const BigInt d = abs(determinant(g.matrix));
    if (d == 0) r.fi_holds = false;
    if (d > 1) r.non_automorphic = true;
  }
  r.faithful_word_bound = std::max(word_bound, 2);
  const QMat id = identity<BigRat>(a.rank());

  std::optional<Word> witness;
  if (a.kind() == MonoidKind::FreeAbelian) {
    for (long total = 1; total <= r.faithful_word_bound && !witness; ++total)
      for_each_exponent_vector(a.size(), total, true, [&](const std::vector<long>& k) {
        const Word w = word_from_exponents(k);
        if (evaluate(a, w) == id) {
          witness = w;
          return false;
        }
        return true;
      });
  } else {
    std::map<Key, Word> seen{{key_of(id), Word{}}};
    for (int len = 1; len <= r.faithful_word_bound && !witness; ++len) {
      if (std::pow(static_cast<double>(a.size()), len) > 20000) {
        r.faithful_word_bound = len - 1;
        break;
      }
      for_each_free_word(a.size(), len, true, [&](const Word& w) {
        const Word nw = normalize(a, w);
        auto [it, inserted] = seen.emplace(key_of(evaluate(a, nw)), nw);
        if (!inserted) {
          Word both = nw;
          for (const auto& l : inverse_word(it->second)) both.push_back(l);
          witness = normalize(a, both);
          return false;
        }
        return true;
      });
    }
  }
  r.faithful_on_generators = !witness.has_value();
  r.faithfulness_witness = witness;
  r.jf_note = "holds automatically: left Ore monoid acting on the torsion-free group Z^n";
  r.pc_note = a.kind() == MonoidKind::FreeAbelian ? "holds: abelian monoids are left reversible"
                                                  : "not checked for non-abelian monoids";
  return r;
}

namespace {

struct FamilyBuilder {
  const AlgebraicAction& a;
  ConstructibleFamily& f;
  std::map<Lattice, std::size_t>& index;
  std::size_t cap;

  bool add(Lattice l, Derivation d, int round) {
    if (index.count(l)) return false;
    if (f.members.size() >= cap) {
      f.truncated = true;
      return false;
    }
    index.emplace(l, f.members.size());
    f.members.push_back(std::move(l));
    f.derivations.push_back(d);
    f.round.push_back(round);
    return true;
  }

  // One round; returns the number of new members.
  std::size_t step(int round) {
    const std::size_t before = f.members.size();
    const std::size_t last_round_start = [&] {
      std::size_t s = 0;
      while (s < before && f.round[s] < round - 1) ++s;
      return s;
    }();
    for (std::size_t i = 0; i < before; ++i)
      for (std::size_t g = 0; g < a.size(); ++g) {
        add(image(a.matrix(g), f.members[i]), {Derivation::Op::Image, g, i, i}, round);
        add(preimage(a.matrix(g), f.members[i]), {Derivation::Op::Preimage, g, i, i}, round);
      }
    // Pairs of members older than the previous round were intersected then.
    const std::size_t after_maps = f.members.size();
    for (std::size_t j = 0; j < after_maps; ++j) {
      if (j < last_round_start) continue;
      for (std::size_t i = 0; i < j; ++i)
        add(intersect(f.members[i], f.members[j]), {Derivation::Op::Intersect, 0, i, j}, round);
    }
    return f.members.size() - before;
  }
};

}  // namespace

ConstructibleFamily constructible_family(const AlgebraicAction& a, int depth, std::size_t cap) {
  if (depth < 0) throw DomainError("depth must be nonnegative");
  ConstructibleFamily f;
  f.depth = depth;
  std::map<Lattice, std::size_t> index;
  FamilyBuilder b{a, f, index, cap};
  b.add(Lattice::full(a.rank()), {}, 0);
  for (int round = 1; round <= depth; ++round) {
    if (b.step(round) == 0 && !f.truncated) {
      f.saturated = true;
      break;
    }
  }
  if (!f.saturated && !f.truncated) {
    ConstructibleFamily probe = f;
    std::map<Lattice, std::size_t> probe_index = index;
    FamilyBuilder pb{a, probe, probe_index, cap};
    f.saturated = pb.step(depth + 1) == 0 && !probe.truncated;
  }
  for (std::size_t i = 0; i < f.members.size(); ++i)
    for (std::size_t j = 0; j < f.members.size(); ++j) {
      if (i == j) continue;
      const BigInt small = f.members[i].index(), big = f.members[j].index();
      if (small % big != 0) continue;
      if (f.members[j].contains(f.members[i])) f.inclusions.emplace_back(i, j);
    }
  return f;
}

Lattice replay(const AlgebraicAction& a, const ConstructibleFamily& f, std::size_t i) {
  const Derivation& d = f.derivations.at(i);
  switch (d.op) {
    case Derivation::Op::Start:
      return Lattice::full(a.rank());
    case Derivation::Op::Image:
      return image(a.matrix(d.gen), replay(a, f, d.lhs));
    case Derivation::Op::Preimage:
      return preimage(a.matrix(d.gen), replay(a, f, d.lhs));
    case Derivation::Op::Intersect:
      break;
  }
  return intersect(replay(a, f, d.lhs), replay(a, f, d.rhs));
}

std::set<BigInt> index_set(const ConstructibleFamily& f) {
  std::set<BigInt> out;
  for (const auto& l : f.members) out.insert(l.index());
  return out;
}

std::set<BigInt> index_set(const AlgebraicAction& a, int depth) { return index_set(constructible_family(a, depth)); }

std::optional<int> has_root_of_unity_eigenvalue(const ZMat& m) {
  const auto orders = root_of_unity_orders(to_rational(charpoly(m)));
  if (orders.empty()) return std::nullopt;
  return orders.front();
}

ConditionFReport check_condition_F(const AlgebraicAction& a, int word_bound, bool monoid_only) {
  ConditionFReport r;
  r.word_bound = word_bound;
  const QMat id = identity<BigRat>(a.rank());
  auto test = [&](const Word& w) {
    ++r.words_checked;
    if (determinant(QMat(id - evaluate(a, w))) == 0) {
      r.holds = false;
      r.witness = w;
      return false;
    }
    return true;
  };
  for (int len = 1; len <= word_bound && r.holds; ++len) {
    if (a.kind() == MonoidKind::FreeAbelian) {
      for_each_exponent_vector(a.size(), len, !monoid_only,
                               [&](const std::vector<long>& k) { return test(word_from_exponents(k)); });
    } else {
      for_each_free_word(a.size(), len, monoid_only, [&](const Word& w) { return test(normalize(a, w)); });
    }
  }
  if (a.size() == 1) {
    r.root_of_unity_order = has_root_of_unity_eigenvalue(a.matrix(0));
    r.all_powers = !r.root_of_unity_order.has_value();
  }
  return r;
}

SFReport check_SF_via_det(const AlgebraicAction& a) {
  if (a.kind() != MonoidKind::FreeAbelian) throw DomainError("determinant test needs a free-abelian monoid");
  SFReport r;
  std::vector<Factorization> facs;
  std::set<BigInt> primes;
  for (const auto& g : a.generators()) {
    const BigInt d = determinant(g.matrix);
    r.determinants.push_back(d);
    Factorization f = trial_factor(d);
    if (!f.complete) throw Inconclusive("unfactored determinant " + d.str() + " of generator '" + g.name + "'");
    for (const auto& p : f.primes()) primes.insert(p);
    facs.push_back(std::move(f));
  }
  // Signs only matter up to an index-2 subgroup of the kernel, so the map is
  // injective exactly when the prime-exponent matrix has full column rank.
  const auto m = static_cast<Eigen::Index>(a.size());
  QMat e(static_cast<Eigen::Index>(primes.size()), m);
  Eigen::Index row = 0;
  for (const auto& p : primes) {
    for (Eigen::Index j = 0; j < m; ++j) e(row, j) = facs[static_cast<std::size_t>(j)].valuation(p);
    ++row;
  }
  const QMat ker = m == 0 ? QMat() : (primes.empty() ? QMat(identity<BigRat>(m)) : nullspace(e));
  r.holds = ker.cols() == 0;
  if (!r.holds) {
    BigInt k = 1;
    for (Eigen::Index j = 0; j < m; ++j) k = lcm(k, denom(ker(j, 0)));
    std::vector<BigInt> w(static_cast<std::size_t>(m), 0);
    BigInt g = 0;
    for (Eigen::Index j = 0; j < m; ++j) {
      w[static_cast<std::size_t>(j)] = numer(ker(j, 0) * BigRat(k));
      g = gcd(g, w[static_cast<std::size_t>(j)]);
    }
    const auto lead = std::find_if(w.begin(), w.end(), [](const BigInt& x) { return x != 0; });
    if (lead != w.end() && *lead < 0) g = -g;
    for (auto& x : w) x /= g;
    r.kernel = w;
  }
  return r;
}

namespace {

// Some standard basis vector generates Z^n as a Z[M]-module.
bool has_cyclic_basis_vector(const ZMat& m) {
  const Eigen::Index n = m.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    ZMat k(n, n);
    ZVec v = ZVec::Unit(n, i);
    for (Eigen::Index j = 0; j < n; ++j) {
      k.col(j) = v;
      v = m * v;
    }
    if (abs(determinant(k)) == 1) return true;
  }
  return false;
}

}  // namespace

ExactnessReport exactness(const AlgebraicAction& a, int depth) {
  ExactnessReport r;
  const ConstructibleFamily f = constructible_family(a, depth);
  Lattice meet = Lattice::full(a.rank());
  std::size_t next = 0;
  for (int k = 0; k <= depth; ++k) {
    while (next < f.members.size() && f.round[next] <= k) meet = intersect(meet, f.members[next++]);
    r.intersection_index.push_back(meet.index());
    r.intersection_min_divisor.push_back(snf(meet.basis()).diagonal().front());
  }
  r.index_strictly_increasing = true;
  for (std::size_t i = 1; i < r.intersection_index.size(); ++i)
    if (r.intersection_index[i] <= r.intersection_index[i - 1]) r.index_strictly_increasing = false;
  const std::size_t half = r.intersection_min_divisor.size() / 2;
  r.min_divisor_bounded = depth >= 2;
  for (std::size_t i = half; i < r.intersection_min_divisor.size(); ++i)
    if (r.intersection_min_divisor[i] != r.intersection_min_divisor.back()) r.min_divisor_bounded = false;

  if (a.size() == 1) {
    const ZPoly f_char = charpoly(a.matrix(0));
    r.cyclotomic_factors = cyclotomic_part(f_char);
    const UnitFactorSearch s = find_unit_factor(f_char);
    switch (s.found) {
      case Decision::Yes:
        r.criterion_exact = Decision::No;
        r.unimodular_factor = s.witness;
        break;
      case Decision::No:
        r.criterion_exact = Decision::Yes;
        break;
      case Decision::Undetermined:
        r.criterion_exact = Decision::Undetermined;
        break;
    }
    r.criterion_basis = has_cyclic_basis_vector(a.matrix(0))
                            ? "theorem: Z^n is cyclic over Z[s], exact iff no divisor of the characteristic "
                              "polynomial has constant term +-1 (" + s.method + ")"
                            : "heuristic: Z^n not shown cyclic over Z[s]; characteristic polynomial test (" +
                                  s.method + ")";
  } else {
    r.criterion_basis = "not applicable: more than one generator";
  }
  return r;
}

}  // namespace algact
