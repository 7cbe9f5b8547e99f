#include "algact/groupoid.hpp"

#include <deque>
#include <map>

#include "algact/charpoly.hpp"
#include "algact/number_theory.hpp"

namespace algact {

namespace {

using Key = std::vector<BigInt>;
Key key_of(const ZVec& v) { return Key(v.data(), v.data() + v.size()); }

std::vector<QVec> default_samples(Eigen::Index n) {
  std::vector<QVec> out;
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(QVec::Unit(n, i));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) out.push_back(QVec::Unit(n, i) + QVec::Unit(n, j));
  return out;
}

}  // namespace

SemidirectElem SemidirectElem::identity(Eigen::Index n) { return {QVec::Zero(n), algact::identity<BigRat>(n)}; }
SemidirectElem SemidirectElem::translation(const QVec& a) { return {a, algact::identity<BigRat>(a.size())}; }
SemidirectElem SemidirectElem::linear(const QMat& g) { return {QVec::Zero(g.rows()), g}; }

SemidirectElem sd_mul(const SemidirectElem& x, const SemidirectElem& y) {
  return {x.vec + x.mat * y.vec, x.mat * y.mat};
}

SemidirectElem sd_inv(const SemidirectElem& x) {
  const QMat gi = inverse(x.mat);
  return {-(gi * x.vec), gi};
}

QMat affine_matrix(const SemidirectElem& x) {
  const Eigen::Index n = x.vec.size();
  QMat m = QMat::Zero(n + 1, n + 1);
  m.topLeftCorner(n, n) = x.mat;
  m.topRightCorner(n, 1) = x.vec;
  m(n, n) = 1;
  return m;
}

LevelMap level_map(const AlgebraicAction& a, const Word& s, const Lattice& c, std::uint64_t cap) {
  if (c.rank() != a.rank()) throw DomainError("level has the wrong rank");
  const ZMat m = evaluate_monoid(a, s);
  LevelMap out{preimage(m, c), c, {}, 0, 0};
  const QuotientLevel src(out.source), dst(c);
  std::set<Key> hit;
  for (const ZVec& x : src.representatives(cap)) {
    const ZVec y = dst.reduce(ZVec(m * x));
    hit.insert(key_of(y));
    out.table.emplace_back(x, y);
  }
  out.image_size = static_cast<long>(hit.size());
  out.image_codim = sum(image(m, Lattice::full(a.rank())), c).index();
  return out;
}

std::vector<ZVec> translation_orbit(const Lattice& c, const ZVec& start, const std::vector<ZVec>& generators) {
  std::vector<ZVec> gens = generators;
  if (gens.empty())
    for (Eigen::Index i = 0; i < c.rank(); ++i) gens.push_back(ZVec::Unit(c.rank(), i));
  const QuotientLevel q(c);
  std::vector<ZVec> out;
  std::set<Key> seen;
  std::deque<ZVec> todo{q.reduce(start)};
  seen.insert(key_of(todo.front()));
  while (!todo.empty()) {
    ZVec x = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      ZVec y = q.reduce(ZVec(x + g));
      if (seen.insert(key_of(y)).second) todo.push_back(y);
    }
    out.push_back(std::move(x));
  }
  return out;
}

CHReport verify_ch_identity(const AlgebraicAction& a, const Word& s, std::vector<QVec> samples) {
  if (samples.empty()) samples = default_samples(a.rank());
  const QMat m = evaluate(a, s);
  const auto [kd, p] = clear_denominators(charpoly(m));
  CHReport r;
  r.degree = p.degree();
  for (int i = 0; i < r.degree; ++i) r.kappa.push_back(-p.coeff(i));
  r.kappa.push_back(p.coeff(r.degree));
  r.epsilon = r.kappa.back();
  for (int i = 0; i < r.degree; ++i) r.epsilon -= r.kappa[static_cast<std::size_t>(i)];
  r.det_one_minus = determinant(QMat(identity<BigRat>(a.rank()) - m));
  r.epsilon_matches = BigRat(r.epsilon) == BigRat(r.kappa.back()) * r.det_one_minus;

  const auto s_elem = SemidirectElem::linear(m);
  for (const QVec& x : samples) {
    ++r.samples_checked;
    const auto scaled = [&](int i) { return QVec(BigRat(r.kappa[static_cast<std::size_t>(i)]) * x); };
    QVec lhs = scaled(r.degree), rhs = QVec::Zero(x.size());
    for (int i = 0; i < r.degree; ++i) lhs = m * lhs;
    QVec power_x = x;
    for (int i = 0; i < r.degree; ++i) {
      rhs += BigRat(r.kappa[static_cast<std::size_t>(i)]) * power_x;
      power_x = m * power_x;
    }
    SemidirectElem left = SemidirectElem::identity(x.size());
    for (int i = 0; i < r.degree; ++i) left = sd_mul(left, s_elem);
    left = sd_mul(left, SemidirectElem::translation(scaled(r.degree)));
    SemidirectElem right = SemidirectElem::identity(x.size());
    for (int i = 0; i < r.degree; ++i)
      right = sd_mul(sd_mul(right, SemidirectElem::translation(scaled(i))), s_elem);
    if (lhs != rhs || !(left == right)) {
      r.holds = false;
      r.witness = x;
      break;
    }
  }
  r.holds = r.holds && r.epsilon_matches;
  return r;
}

bool gamma_alpha_relation(const QMat& alpha, const QMat& gamma, const std::vector<BigInt>& kappa) {
  if (kappa.empty()) throw DomainError("kappa must contain kappa_0, ..., kappa_d");
  const auto d = static_cast<long>(kappa.size()) - 1;
  const QMat lhs = power(gamma, d) * power(alpha, to_i64(kappa.back()));
  QMat rhs = identity<BigRat>(alpha.rows());
  for (long i = 0; i < d; ++i) rhs = rhs * power(alpha, to_i64(kappa[static_cast<std::size_t>(i)])) * gamma;
  return lhs == rhs;
}

std::set<BigInt> denominator_support(const AlgebraicAction& a, const Word& w, const ZVec& x) {
  const QVec y = evaluate(a, w) * to_rational(x);
  BigInt den = 1;
  for (Eigen::Index i = 0; i < y.size(); ++i) den = lcm(den, denom(y(i)));
  const Factorization f = trial_factor(den);
  if (!f.complete) throw Inconclusive("denominator " + den.str() + " could not be factored");
  return f.primes();
}

}  // namespace algact
