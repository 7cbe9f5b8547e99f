#include "algact/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <set>

#include "algact/charpoly.hpp"
#include "algact/number_theory.hpp"

namespace algact {

std::string to_string(MonomialOrder o) { return o == MonomialOrder::Lex ? "lex" : "degrevlex"; }

MonomialOrder parse_order(const std::string& name) {
  if (name == "degrevlex" || name == "grevlex") return MonomialOrder::DegRevLex;
  if (name == "lex") return MonomialOrder::Lex;
  throw DomainError("unsupported monomial order '" + name + "'");
}

bool monomial_less(const Exponent& a, const Exponent& b, MonomialOrder order) {
  if (order == MonomialOrder::Lex) return a < b;
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

namespace {

Exponent lcm_exp(const Exponent& a, const Exponent& b) {
  Exponent e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return e;
}

Exponent diff_exp(const Exponent& a, const Exponent& b) {
  Exponent e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] - b[i];
  return e;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

void check_nvars(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) throw DomainError("polynomials in different numbers of variables");
}

}  // namespace

MPoly MPoly::constant(std::size_t nvars, const BigRat& c) {
  MPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  return monomial(e);
}

MPoly MPoly::monomial(const Exponent& e, const BigRat& c) {
  MPoly p(e.size());
  p.add_term(e, c);
  return p;
}

BigRat MPoly::coeff(const Exponent& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? BigRat(0) : it->second;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

std::pair<Exponent, BigRat> MPoly::lead(MonomialOrder order) const {
  if (t_.empty()) throw DomainError("leading term of the zero polynomial");
  if (order == MonomialOrder::Lex) return *t_.rbegin();
  auto best = t_.begin();
  for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
    if (monomial_less(best->first, it->first, order)) best = it;
  return *best;
}

MPoly MPoly::monic(MonomialOrder order) const {
  if (is_zero()) return *this;
  return BigRat(1) / lead(order).second * *this;
}

void MPoly::add_term(const Exponent& e, const BigRat& c) {
  if (e.size() != n_) throw DomainError("exponent vector has the wrong length");
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  check_nvars(a, b);
  MPoly r = a;
  for (const auto& [e, c] : b.t_) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& a) { return BigRat(-1) * a; }
MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  check_nvars(a, b);
  MPoly r(a.n_);
  for (const auto& [e, c] : b.t_) r = r + a.shifted(e, c);
  return r;
}

MPoly operator*(const BigRat& s, const MPoly& a) {
  MPoly r(a.n_);
  if (s == 0) return r;
  for (const auto& [e, c] : a.t_) r.t_.emplace(e, s * c);
  return r;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly r = constant(n_, 1), base = *this;
  for (; k; k >>= 1) {
    if (k & 1) r = r * base;
    if (k > 1) base = base * base;
  }
  return r;
}

MPoly MPoly::shifted(const Exponent& e, const BigRat& c) const {
  MPoly r(n_);
  if (c == 0) return r;
  for (const auto& [f, d] : t_) {
    Exponent g = f;
    for (std::size_t i = 0; i < n_; ++i) g[i] += e[i];
    r.t_.emplace(std::move(g), c * d);
  }
  return r;
}

std::string MPoly::to_string(const std::vector<std::string>& vars) const {
  if (t_.empty()) return "0";
  std::vector<Exponent> keys;
  for (const auto& [e, c] : t_) keys.push_back(e);
  std::sort(keys.begin(), keys.end(),
            [](const Exponent& a, const Exponent& b) { return monomial_less(b, a, MonomialOrder::DegRevLex); });
  std::string out;
  for (const Exponent& e : keys) {
    BigRat c = t_.at(e);
    const bool neg = c < 0;
    if (neg) c = -c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += i < vars.size() ? vars[i] : "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out += c.str();
    else if (c == 1)
      out += mono;
    else
      out += c.str() + "*" + mono;
  }
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(const std::string& s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  MPoly parse() {
    MPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        skip();
        const std::size_t at = pos_;
        const MPoly d = unary();
        if (d.is_zero()) throw ParseError(at, "division by zero");
        if (d.total_degree() != 0) throw ParseError(at, "division by a non-constant");
        acc = BigRat(1) / d.coeff(Exponent(vars_.size(), 0)) * acc;
      } else {
        return acc;
      }
    }
  }

  MPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (!accept('^')) return base;
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected a non-negative integer exponent");
    const BigInt k = integer();
    if (k > 1000) fail("exponent too large");
    return base.pow(k.convert_to<unsigned>());
  }

  BigInt integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return BigInt(s_.substr(start, pos_ - start));
  }

  MPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return MPoly::constant(vars_.size(), BigRat(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw ParseError(start, "unknown variable '" + name + "'");
      return MPoly::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
    }
    fail("unexpected character");
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  std::set<std::string> seen;
  for (const auto& v : vars)
    if (!seen.insert(v).second) throw DomainError("duplicate variable '" + v + "'");
  return Parser(text, vars).parse();
}

// ---------------------------------------------------------------- Groebner bases

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& g, MonomialOrder order) {
  std::vector<std::pair<Exponent, BigRat>> leads;
  for (const MPoly& h : g) leads.push_back(h.lead(order));
  MPoly p = f, r(f.nvars());
  while (!p.is_zero()) {
    const auto [e, c] = p.lead(order);
    bool reduced = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!divides(leads[i].first, e)) continue;
      p = p - g[i].shifted(diff_exp(e, leads[i].first), c / leads[i].second);
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(e, c);
      p.add_term(e, -c);
    }
  }
  return r;
}

namespace {

MPoly s_polynomial(const MPoly& f, const MPoly& g, MonomialOrder order) {
  const auto [ef, cf] = f.lead(order);
  const auto [eg, cg] = g.lead(order);
  const Exponent l = lcm_exp(ef, eg);
  return f.shifted(diff_exp(l, ef), BigRat(1) / cf) - g.shifted(diff_exp(l, eg), BigRat(1) / cg);
}

}  // namespace

std::vector<MPoly> buchberger(const std::vector<MPoly>& gens, MonomialOrder order) {
  if (gens.empty()) throw DomainError("buchberger: no generators");
  const std::size_t n = gens.front().nvars();
  std::vector<MPoly> g;
  std::vector<Exponent> lm;
  for (const MPoly& f : gens) {
    if (f.nvars() != n) throw DomainError("buchberger: generators in different numbers of variables");
    if (!f.is_zero()) {
      g.push_back(f.monic(order));
      lm.push_back(g.back().lead(order).first);
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace(i, j);

  auto pending = [&](std::size_t a, std::size_t b) { return pairs.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pairs.empty()) {
    auto best = pairs.begin();
    Exponent best_lcm = lcm_exp(lm[best->first], lm[best->second]);
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Exponent l = lcm_exp(lm[it->first], lm[it->second]);
      if (monomial_less(l, best_lcm, order)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pairs.erase(best);

    if (coprime(lm[i], lm[j])) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k)
      chain = k != i && k != j && divides(lm[k], best_lcm) && !pending(i, k) && !pending(j, k);
    if (chain) continue;

    MPoly h = normal_form(s_polynomial(g[i], g[j], order), g, order);
    if (h.is_zero()) continue;
    g.push_back(h.monic(order));
    lm.push_back(g.back().lead(order).first);
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace(k, g.size() - 1);
  }

  // Minimize, then interreduce.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k)
      redundant = k != i && divides(lm[k], lm[i]) && (lm[k] != lm[i] || k < i);
    if (!redundant) keep.push_back(i);
  }
  std::vector<MPoly> minimal;
  for (std::size_t i : keep) minimal.push_back(g[i]);
  std::vector<MPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    const auto [e, c] = minimal[i].lead(order);
    MPoly tail = minimal[i];
    tail.add_term(e, -c);
    MPoly r = normal_form(tail, others, order);
    r.add_term(e, c);
    reduced.push_back(r.monic(order));
  }
  std::sort(reduced.begin(), reduced.end(), [order](const MPoly& a, const MPoly& b) {
    return monomial_less(b.lead(order).first, a.lead(order).first, order);
  });
  return reduced;
}

bool is_zero_dimensional(const std::vector<MPoly>& gb, MonomialOrder order) {
  if (gb.empty()) return false;
  const std::size_t n = gb.front().nvars();
  std::vector<bool> hit(n, false);
  for (const MPoly& g : gb) {
    const Exponent e = g.lead(order).first;
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i]) ++support, var = i;
    if (support == 0) return true;  // the unit ideal
    if (support == 1) hit[var] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

// ---------------------------------------------------------------- quotient algebra

QuotientAlgebra::QuotientAlgebra(std::vector<MPoly> gb, MonomialOrder order)
    : n_(gb.empty() ? 0 : gb.front().nvars()), order_(order), gb_(std::move(gb)) {
  if (!is_zero_dimensional(gb_, order_)) throw DomainError("the ideal is not zero-dimensional");
  std::vector<Exponent> leads;
  for (const MPoly& g : gb_) leads.push_back(g.lead(order_).first);

  std::vector<int> box(n_, std::numeric_limits<int>::max());
  for (const Exponent& e : leads) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (e[i]) ++support, var = i;
    if (support == 1) box[var] = std::min(box[var], e[var]);
  }

  bool unit = std::any_of(leads.begin(), leads.end(),
                          [](const Exponent& e) { return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }); });
  if (!unit) {
    Exponent e(n_, 0);
    for (;;) {
      if (std::none_of(leads.begin(), leads.end(), [&](const Exponent& l) { return divides(l, e); }))
        staircase_.push_back(e);
      std::size_t i = 0;
      while (i < n_ && ++e[i] >= box[i]) e[i++] = 0;
      if (i == n_) break;
    }
  }
  std::sort(staircase_.begin(), staircase_.end(), [](const Exponent& a, const Exponent& b) {
    const int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
    return da != db ? da < db : a > b;
  });
  for (std::size_t j = 0; j < staircase_.size(); ++j) position_[staircase_[j]] = j;

  const auto d = static_cast<Eigen::Index>(staircase_.size());
  for (std::size_t i = 0; i < n_; ++i) {
    QMat t = QMat::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
      Exponent e = staircase_[static_cast<std::size_t>(j)];
      ++e[i];
      t.col(j) = coords(MPoly::monomial(e));
    }
    t_.push_back(std::move(t));
  }
}

QVec QuotientAlgebra::coords(const MPoly& f) const {
  QVec v = QVec::Zero(static_cast<Eigen::Index>(dim()));
  const MPoly r = reduce(f);
  for (const auto& [e, c] : r.terms()) v(static_cast<Eigen::Index>(position_.at(e))) = c;
  return v;
}

QMat QuotientAlgebra::mult_matrix(const MPoly& f) const {
  if (f.nvars() != n_) throw DomainError("mult_matrix: wrong number of variables");
  const auto d = static_cast<Eigen::Index>(dim());
  QMat acc = QMat::Zero(d, d);
  std::vector<std::vector<QMat>> powers(n_, std::vector<QMat>{identity<BigRat>(d)});
  for (const auto& [e, c] : f.terms()) {
    QMat m = c * identity<BigRat>(d);
    for (std::size_t i = 0; i < n_; ++i) {
      auto& p = powers[i];
      while (static_cast<int>(p.size()) <= e[i]) p.push_back(p.back() * t_[i]);
      if (e[i]) m = m * p[static_cast<std::size_t>(e[i])];
    }
    acc += m;
  }
  return acc;
}

QuotientAlgebra quotient_algebra(const std::vector<MPoly>& gens, MonomialOrder order) {
  return QuotientAlgebra(buchberger(gens, order), order);
}

CharNorm char_poly_and_norm(const QuotientAlgebra& qa, const MPoly& f) {
  const QMat t = qa.mult_matrix(f);
  return {charpoly(t), abs(determinant(t))};
}

// ---------------------------------------------------------------- condition battery

namespace {

const char* kGapNote =
    "the sufficient condition on products of f over subsets of V(I) is not evaluated; "
    "unimodular divisibility of the characteristic polynomial is tested directly instead";

// Nonconstant monomials of total degree <= bound, by degree, u_1 first.
std::vector<Exponent> monomials_up_to(std::size_t n, int bound) {
  std::vector<Exponent> out;
  for (int deg = 1; deg <= bound; ++deg) {
    std::vector<Exponent> level;
    Exponent e(n, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
      if (i + 1 == n) {
        e[i] = left;
        level.push_back(e);
        return;
      }
      for (int k = left; k >= 0; --k) {
        e[i] = k;
        self(self, i + 1, left - k);
      }
    };
    if (n) rec(rec, 0, deg);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace

CommAlgReport commalg_conditions(const std::vector<MPoly>& gens, const std::vector<std::string>& vars,
                                 MonomialOrder order) {
  CommAlgReport r;
  r.vars = vars;
  r.gap_note = kGapNote;
  const std::vector<MPoly> gb = buchberger(gens, order);
  const std::size_t n = gens.front().nvars();
  if (vars.size() != n) throw DomainError("commalg_conditions: variable names do not match the polynomials");

  r.zero_dimensional = is_zero_dimensional(gb, order);
  for (std::size_t k = 0; k < n; ++k)
    if (normal_form(MPoly::variable(n, k), gb, order).is_zero()) r.vars_in_ideal.push_back(k);
  const bool unit_ideal = gb.size() == 1 && gb.front().total_degree() == 0;
  r.a = r.zero_dimensional && r.vars_in_ideal.empty() && !unit_ideal ? Decision::Yes : Decision::No;
  if (!r.zero_dimensional || unit_ideal) return r;

  const QuotientAlgebra qa(gb, order);
  r.dim = qa.dim();
  r.staircase = qa.staircase();
  const auto d = static_cast<Eigen::Index>(qa.dim());

  bool all_nonzero = true;
  for (std::size_t k = 0; k < n; ++k) {
    r.det_T.push_back(determinant(qa.T(k)));
    r.chi.push_back(charpoly(qa.T(k)));
    all_nonzero = all_nonzero && r.det_T.back() != 0;
  }
  r.b = all_nonzero ? Decision::Yes : Decision::No;

  r.c_bound = 2 * static_cast<int>(qa.dim());
  r.c = Decision::Undetermined;
  for (const Exponent& e : monomials_up_to(n, r.c_bound)) {
    const BigRat det = determinant(QMat(identity<BigRat>(d) - qa.mult_matrix(MPoly::monomial(e))));
    if (det != 0) {
      r.c = Decision::Yes;
      r.c_witness = e;
      r.c_det = det;
      break;
    }
  }

  for (const BigRat& x : r.det_T) r.norms.push_back(abs(x));
  std::vector<Factorization> facs;
  for (std::size_t k = 0; k < n; ++k) {
    const BigRat& nk = r.norms[k];
    if (nk == 0) {
      r.d = Decision::No;
      r.d_note = "N(" + vars[k] + ") = 0";
      r.d_primes.assign(n, std::nullopt);
      return r;
    }
    if (!is_integral(nk)) {
      r.d = Decision::Undetermined;
      r.d_note = "non-integral norm N(" + vars[k] + ") = " + nk.str();
      return r;
    }
    facs.push_back(trial_factor(numer(nk)));
    if (!facs.back().complete) {
      r.d = Decision::Undetermined;
      r.d_note = "unfactored norm N(" + vars[k] + ") = " + nk.str();
      return r;
    }
  }
  r.d = Decision::Yes;
  for (std::size_t j = 0; j < n; ++j) {
    std::optional<BigInt> witness;
    for (const BigInt& p : facs[j].primes()) {
      bool exclusive = true;
      for (std::size_t k = 0; k < n && exclusive; ++k)
        if (k != j && numer(r.norms[k]) % p == 0) exclusive = false;
      if (exclusive) {
        witness = p;
        break;
      }
    }
    if (!witness) {
      r.d = Decision::No;
      if (r.d_note.empty()) r.d_note = "no prime divides N(" + vars[j] + ") exclusively";
    }
    r.d_primes.push_back(witness);
  }
  return r;
}

PrincipalReport principal_exactness(const ZPoly& f) {
  if (!f.is_monic() || f.degree() < 1) throw DomainError("principal_exactness: need a monic non-constant polynomial");
  if (f.coeff(0) == 0) throw DomainError("principal_exactness: f(0) = 0, multiplication by u is not injective");
  PrincipalReport r;
  r.gap_note = kGapNote;
  const UnitFactorSearch s = find_unit_factor(f);
  r.exact = s.found == Decision::Yes ? Decision::No : s.found == Decision::No ? Decision::Yes : Decision::Undetermined;
  r.unimodular_factor = s.witness;
  r.method = s.method;
  r.cyclotomic_factors = cyclotomic_part(f);
  r.non_automorphic = abs(f.coeff(0)) > 1;
  r.mixing = f(BigInt(1)) != 0;
  r.standing = r.non_automorphic && r.mixing;
  return r;
}

}  // namespace algact
