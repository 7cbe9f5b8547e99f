#include "algact/number_theory.hpp"

#include <algorithm>

#include "algact/errors.hpp"

namespace algact {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % p == 0) return n == p;
  }
  for (std::uint64_t d = 17; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

std::set<BigInt> Factorization::primes() const {
  std::set<BigInt> out;
  for (const auto& [p, e] : factors) out.insert(p);
  return out;
}

int Factorization::valuation(const BigInt& p) const {
  for (const auto& [q, e] : factors)
    if (q == p) return e;
  return 0;
}

Factorization trial_factor(const BigInt& n_in, std::uint64_t bound) {
  if (n_in == 0) throw DomainError("trial_factor: zero has no factorization");
  Factorization f;
  BigInt n = abs(n_in);
  for (std::uint64_t d = 2; d <= bound; d += (d == 2 ? 1 : 2)) {
    const BigInt bd(d);
    if (bd * bd > n) break;
    int e = 0;
    while (n % bd == 0) {
      n /= bd;
      ++e;
    }
    if (e) f.factors.emplace_back(bd, e);
  }
  if (n > 1) {
    const BigInt b(bound);
    if (n <= b * b) {
      f.factors.emplace_back(n, 1);
      std::sort(f.factors.begin(), f.factors.end());
    } else {
      f.cofactor = n;
      f.complete = false;
    }
  }
  return f;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace algact
