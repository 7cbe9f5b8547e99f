#include "algact/poly.hpp"

#include <map>
#include <mutex>

namespace algact {

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

ZPoly to_integer(const QPoly& p) {
  std::vector<BigInt> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) {
    if (!is_integral(x)) throw DomainError("polynomial has a non-integral coefficient");
    c.push_back(numer(x));
  }
  return ZPoly(std::move(c));
}

std::pair<BigInt, ZPoly> clear_denominators(const QPoly& p) {
  BigInt k = 1;
  for (const auto& x : p.coeffs()) k = lcm(k, denom(x));
  return {k, to_integer(BigRat(k) * p)};
}

long totient(long k) {
  long result = k;
  for (long p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

ZPoly cyclotomic(int k) {
  if (k < 1) throw DomainError("cyclotomic: index must be positive");
  static std::mutex mu;
  static std::map<int, ZPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  ZPoly f = ZPoly::monomial(1, k) - ZPoly{1};
  for (int d = 1; d < k; ++d) {
    if (k % d) continue;
    auto [q, r] = divrem(f, cyclotomic(d));
    if (!r.is_zero()) throw Error("cyclotomic: inexact division (arithmetic bug)");
    f = q;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(k, f);
  return f;
}

}  // namespace algact
