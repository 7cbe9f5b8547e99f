#include "algact/invariants.hpp"

#include "algact/charpoly.hpp"
#include "algact/number_theory.hpp"
#include "algact/unit_factor.hpp"

namespace algact {

namespace {

QMat flatten_rows(const std::vector<QMat>& ms, Eigen::Index n) {
  QMat out(static_cast<Eigen::Index>(ms.size()), n * n);
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) out(static_cast<Eigen::Index>(i), r * n + c) = ms[i](r, c);
  return out;
}

Eigen::Index span_rank(const std::vector<QMat>& ms, Eigen::Index n) {
  return ms.empty() ? 0 : rank(flatten_rows(ms, n));
}

// Appends m to a linearly independent list when it enlarges the span.
void extend_basis(std::vector<QMat>& basis, const QMat& m, Eigen::Index n) {
  basis.push_back(m);
  if (span_rank(basis, n) < static_cast<Eigen::Index>(basis.size())) basis.pop_back();
}

BigInt factorial(int k) {
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

QMat big_power(const QMat& m, BigInt e) {
  QMat result = identity<BigRat>(m.rows()), b = m;
  while (e > 0) {
    if (e % 2 == 1) result = result * b;
    b = b * b;
    e /= 2;
  }
  return result;
}

// Monic, squarefree, and no rational root or cyclotomic factor; degree <= 3
// is then irreducible. Returns "decided" or "asserted".
std::string check_irreducible(const ZPoly& f) {
  if (!f.is_monic() || f.degree() < 1) throw DomainError("polynomial must be monic and non-constant: " + f.to_string());
  if (gcd(to_rational(f), to_rational(f.derivative())).degree() > 0)
    throw DomainError("polynomial is not squarefree: " + f.to_string());
  if (f.degree() == 1) return "decided";
  if (f.coeff(0) == 0) throw DomainError("polynomial has the root 0: " + f.to_string());
  const Factorization fac = trial_factor(f.coeff(0));
  if (!fac.complete) return "asserted";
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : fac.factors) {
    const std::size_t k = divs.size();
    BigInt pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < k; ++j) divs.push_back(divs[j] * pk);
    }
  }
  for (const auto& d : divs)
    for (const BigInt& r : {d, BigInt(-d)})
      if (f(r) == 0) throw DomainError("polynomial has the rational root " + r.str() + ": " + f.to_string());
  const auto cyc = cyclotomic_part(f);
  if (!cyc.empty() && cyclotomic(cyc.front().order) != f) throw DomainError("polynomial has a cyclotomic factor: " + f.to_string());
  return f.degree() <= 3 ? "decided" : "asserted";
}

}  // namespace

ConjugacyClass conjugacy_class(const QMat& m) { return {m.rows(), poly_invariant_factors(m)}; }

bool q_conjugate(const QMat& a, const QMat& b) {
  require_square(a, "q_conjugate");
  require_square(b, "q_conjugate");
  return conjugacy_class(a) == conjugacy_class(b);
}

std::optional<BigInt> torsion_order(const ZMat& m) {
  require_square(m, "torsion_order");
  if (determinant(m) == 0) throw DomainError("torsion_order: matrix is singular");
  const ZPoly f = charpoly(m);
  const auto parts = cyclotomic_part(f);
  int deg = 0;
  BigInt order = 1;
  for (const auto& p : parts) {
    deg += p.multiplicity * static_cast<int>(totient(p.order));
    order = lcm(order, BigInt(p.order));
  }
  if (deg != f.degree()) return std::nullopt;
  const QPoly mp = minimal_polynomial(to_rational(m));
  if (gcd(mp, mp.derivative()).degree() > 0) return std::nullopt;
  if (power(m, order.convert_to<unsigned long>()) != identity<BigInt>(m.rows()))
    throw Error("torsion_order: M^" + order.str() + " != I for a semisimple cyclotomic matrix");
  return order;
}

bool is_nilpotent(const QMat& m) {
  require_square(m, "is_nilpotent");
  return is_zero(QMat(power(m, static_cast<unsigned long>(m.rows()))));
}

bool is_unipotent(const QMat& m) { return is_nilpotent(QMat(m - identity<BigRat>(m.rows()))); }

QMat unipotent_log(const QMat& alpha) {
  if (!is_unipotent(alpha)) throw DomainError("unipotent_log: matrix is not unipotent");
  const Eigen::Index n = alpha.rows();
  const QMat x = alpha - identity<BigRat>(n);
  QMat acc = QMat::Zero(n, n), term = x;
  for (long i = 1; i < n && !is_zero(term); ++i) {
    acc += BigRat(i % 2 ? 1 : -1, i) * term;
    term = term * x;
  }
  return acc;
}

QMat nilpotent_exp(const QMat& nmat) {
  if (!is_nilpotent(nmat)) throw DomainError("nilpotent_exp: matrix is not nilpotent");
  const Eigen::Index n = nmat.rows();
  QMat acc = identity<BigRat>(n), term = identity<BigRat>(n);
  for (long i = 1; i < n; ++i) {
    term = term * nmat * BigRat(1, i);
    acc += term;
  }
  return acc;
}

RankBoundReport rank_bound_check(const std::vector<QMat>& generators) {
  RankBoundReport r;
  if (generators.empty()) throw DomainError("rank_bound_check: empty family");
  const Eigen::Index n = generators.front().rows();
  r.n = n;
  std::vector<QMat> etas, logs;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const QMat& g = generators[i];
    if (g.rows() != n || g.cols() != n) throw DomainError("rank_bound_check: sizes differ");
    if (!is_unipotent(g)) throw DomainError("rank_bound_check: generator " + std::to_string(i) + " is not unipotent");
    for (std::size_t j = 0; j < i; ++j)
      if (g * generators[j] != generators[j] * g) throw DomainError("rank_bound_check: generators do not commute");
    etas.push_back(g - identity<BigRat>(n));
    logs.push_back(unipotent_log(g));
  }
  r.rank = span_rank(logs, n);
  // Span of alpha - 1 over the whole group: closed under products since
  // (a - 1)(b - 1) = (ab - 1) - (a - 1) - (b - 1).
  std::vector<QMat> basis;
  for (const auto& e : etas) extend_basis(basis, e, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (const auto& e : etas) extend_basis(basis, QMat(basis[i] * e), n);
  r.span_dim = static_cast<Eigen::Index>(basis.size());
  QMat stacked(n * static_cast<Eigen::Index>(etas.size()), n);
  for (std::size_t i = 0; i < etas.size(); ++i) stacked.middleRows(static_cast<Eigen::Index>(i) * n, n) = etas[i];
  r.kernel_dim = n - rank(stacked);
  r.bound = n * (n - r.kernel_dim);
  r.trivial = r.kernel_dim == n;
  r.holds = r.trivial || (r.rank <= r.span_dim && r.span_dim < r.bound);
  return r;
}

PowerWitness unipotent_power_witness(const QMat& alpha, long kappa, const QMat& gamma, int dim_bound) {
  require_square(alpha, "unipotent_power_witness");
  if (dim_bound < 1 || dim_bound > 10) throw DomainError("unipotent_power_witness: dim_bound must be in [1, 10]");
  if (kappa < 2) throw DomainError("unipotent_power_witness: kappa must be at least 2");
  const QMat gi = inverse(gamma);
  const QMat ak = power(alpha, kappa);
  PowerWitness w;
  if (alpha == gamma * ak * gi)
    w.orientation = "alpha = gamma alpha^kappa gamma^-1";
  else if (gamma * alpha * gi == ak)
    w.orientation = "gamma alpha gamma^-1 = alpha^kappa";
  else
    throw DomainError("relation fails: alpha is not conjugate to alpha^kappa by gamma");
  w.m = BigInt(kappa) * factorial(dim_bound) - 1;
  const Eigen::Index n = alpha.rows();
  w.eta = big_power(alpha, w.m) - identity<BigRat>(n);
  QMat p = w.eta;
  for (int j = 1; j <= n; ++j) {
    if (is_zero(p)) {
      w.nilpotent = true;
      w.nilpotency_index = j;
      break;
    }
    p = p * w.eta;
  }
  return w;
}

std::string to_string(DistinguisherVerdict::Status s) {
  switch (s) {
    case DistinguisherVerdict::Status::DistinguishedByDegree:
      return "distinguished: degree";
    case DistinguisherVerdict::Status::DistinguishedAtPrime:
      return "distinguished at prime";
    case DistinguisherVerdict::Status::Indistinguishable:
      break;
  }
  return "indistinguishable up to bound";
}

DistinguisherVerdict splitting_signature_distinguisher(const ZPoly& f, const ZPoly& g, std::uint64_t prime_bound) {
  DistinguisherVerdict v{DistinguisherVerdict::Status::Indistinguishable, std::nullopt, {}, {}, prime_bound, ""};
  const std::string irr_f = check_irreducible(f), irr_g = check_irreducible(g);
  v.irreducibility = (irr_f == "decided" && irr_g == "decided") ? "decided" : "asserted";
  if (f.degree() != g.degree()) {
    v.status = DistinguisherVerdict::Status::DistinguishedByDegree;
    return v;
  }
  for (std::uint64_t p : primes_up_to(prime_bound)) {
    const SplitSignature a = ddf_signature(f, p), b = ddf_signature(g, p);
    if (a.ramified || b.ramified || a == b) continue;
    v.status = DistinguisherVerdict::Status::DistinguishedAtPrime;
    v.prime = p;
    v.sig_f = a;
    v.sig_g = b;
    return v;
  }
  return v;
}

}  // namespace algact
