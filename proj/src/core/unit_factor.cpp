#include "algact/unit_factor.hpp"

#include <algorithm>

#include "algact/number_theory.hpp"

namespace algact {

namespace {

// Smallest r >= 0 with r^k >= a, for a >= 0.
BigInt ceil_root(const BigInt& a, int k) {
  BigInt lo = 0, hi = 1;
  while (BigInt(mp::pow(hi, static_cast<unsigned>(k))) < a) hi *= 2;
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (BigInt(mp::pow(mid, static_cast<unsigned>(k))) >= a)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Yes:
      return "yes";
    case Decision::No:
      return "no";
    case Decision::Undetermined:
      break;
  }
  return "undetermined";
}

std::vector<int> root_of_unity_orders(const QPoly& f) {
  std::vector<int> out;
  const int n = f.degree();
  if (n < 1) return out;
  for (int k = 1; k <= 2 * n * n; ++k) {
    if (totient(k) > n) continue;
    if (gcd(f, to_rational(cyclotomic(k))).degree() > 0) out.push_back(k);
  }
  return out;
}

std::vector<CyclotomicPart> cyclotomic_part(const ZPoly& f) {
  std::vector<CyclotomicPart> out;
  const int n = f.degree();
  ZPoly rest = f;
  for (int k = 1; n >= 1 && k <= 2 * n * n; ++k) {
    if (totient(k) > n) continue;
    const ZPoly phi = cyclotomic(k);
    int mult = 0;
    for (;;) {
      if (rest.degree() < phi.degree() || !rest.is_monic()) break;
      auto [q, r] = divrem(rest, phi);
      if (!r.is_zero()) break;
      rest = q;
      ++mult;
    }
    if (mult) out.push_back({k, mult});
  }
  return out;
}

UnitFactorSearch find_unit_factor(const ZPoly& f_in, std::uint64_t candidate_cap) {
  if (!f_in.is_monic() || f_in.degree() < 1) throw DomainError("find_unit_factor: need a monic non-constant polynomial");
  UnitFactorSearch out;

  ZPoly f = f_in;
  while (f.degree() >= 1 && f.coeff(0) == 0) f = divrem(f, ZPoly{0, 1}).first;
  const int n = f.degree();
  if (n < 1) {
    out.found = Decision::No;
    out.method = "only factors of z";
    return out;
  }
  out.max_degree = n;
  if (abs(f.coeff(0)) == 1) {
    out.found = Decision::Yes;
    out.witness = f;
    out.method = "constant term is +-1";
    return out;
  }
  if (auto cyc = cyclotomic_part(f); !cyc.empty()) {
    out.found = Decision::Yes;
    out.witness = cyclotomic(cyc.front().order);
    out.method = "cyclotomic divisor Phi_" + std::to_string(cyc.front().order);
    return out;
  }

  // Newton polygon at every known prime of f(0): at most n - v_p roots of f
  // are p-adic units, and every root of a unimodular factor is a unit.
  int emax = n - 1;
  const Factorization fac = trial_factor(f.coeff(0));
  for (const BigInt& p : fac.primes()) {
    int v = 0;
    while (v <= n && f.coeff(v) % p == 0) ++v;
    emax = std::min(emax, n - v);
  }
  out.max_degree = emax;
  if (emax <= 0) {
    out.found = Decision::No;
    out.method = "p-adic slope bound";
    return out;
  }

  // Fujiwara root bound.
  BigInt r = 0;
  for (int i = 1; i <= n; ++i) r = std::max(r, ceil_root(abs(f.coeff(n - i)), i));
  const BigInt bound = 2 * r;

  // Nonzero values f(a) that any factor's value g(a) must divide.
  std::vector<std::pair<BigInt, BigInt>> probes;
  for (long a : {-3L, -2L, 2L, 3L, 5L}) {
    const BigInt fa = f(BigInt(a));
    if (fa != 0) probes.emplace_back(a, fa);
  }

  bool capped = false;
  for (int e = 1; e <= emax; ++e) {
    std::vector<BigInt> lim(static_cast<std::size_t>(e), 0);
    BigInt total = 2;
    for (int j = 1; j < e; ++j) {
      lim[static_cast<std::size_t>(j)] = binomial(e, e - j) * BigInt(mp::pow(bound, static_cast<unsigned>(e - j)));
      total *= 2 * lim[static_cast<std::size_t>(j)] + 1;
    }
    if (total > BigInt(candidate_cap)) {
      capped = true;
      continue;
    }
    std::vector<BigInt> c(static_cast<std::size_t>(e) + 1, 0);
    c[static_cast<std::size_t>(e)] = 1;
    for (int j = 1; j < e; ++j) c[static_cast<std::size_t>(j)] = -lim[static_cast<std::size_t>(j)];
    for (;;) {
      for (long c0 : {1L, -1L}) {
        c[0] = c0;
        const ZPoly g(c);
        bool ok = true;
        for (const auto& [a, fa] : probes) {
          const BigInt ga = g(a);
          if (ga == 0 || fa % ga != 0) {
            ok = false;
            break;
          }
        }
        if (ok && divrem(f, g).second.is_zero()) {
          out.found = Decision::Yes;
          out.witness = g;
          out.method = "exhaustive search, degree " + std::to_string(e);
          return out;
        }
      }
      int j = 1;
      while (j < e && c[static_cast<std::size_t>(j)] == lim[static_cast<std::size_t>(j)]) {
        c[static_cast<std::size_t>(j)] = -lim[static_cast<std::size_t>(j)];
        ++j;
      }
      if (j >= e) break;
      c[static_cast<std::size_t>(j)] += 1;
    }
  }
  out.found = capped ? Decision::Undetermined : Decision::No;
  out.method = capped ? "search cap reached" : "exhaustive search";
  return out;
}

}  // namespace algact
