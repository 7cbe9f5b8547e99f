#include "algact/poly.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numeric>

#include "algact/number_theory.hpp"
#include "test_util.hpp"

namespace algact {
namespace {

using testing::uniform;

ZPoly random_zpoly(int degree, long bound) {
  std::vector<BigInt> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(uniform(-bound, bound));
  return ZPoly(std::move(c));
}

// Oracle: Phi_k as the product of (z - w) over primitive k-th roots w,
// computed in floating point and rounded.
ZPoly cyclotomic_numeric(int k) {
  std::vector<std::complex<double>> c{1.0};
  for (int j = 1; j <= k; ++j) {
    if (std::gcd(j, k) != 1) continue;
    const std::complex<double> w = std::polar(1.0, 2 * M_PI * j / k);
    std::vector<std::complex<double>> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= w * c[i];
    }
    c = std::move(next);
  }
  std::vector<BigInt> out;
  for (const auto& x : c) out.emplace_back(std::lround(x.real()));
  return ZPoly(std::move(out));
}

TEST(Poly, ArithmeticAndDivision) {
  const ZPoly f{-1, -1, 1};
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f.to_string(), "z^2 - z - 1");
  EXPECT_EQ(ZPoly().degree(), -1);
  EXPECT_EQ(f(BigInt(2)), 1);
  EXPECT_EQ(f.derivative(), (ZPoly{-1, 2}));

  for (int trial = 0; trial < 100; ++trial) {
    const ZPoly a = random_zpoly(static_cast<int>(uniform(0, 6)), 9);
    ZPoly b = random_zpoly(static_cast<int>(uniform(0, 4)), 9);
    b += ZPoly::monomial(1, b.degree() + 1);  // monic
    const auto [q, r] = divrem(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW(divrem(ZPoly{1, 0, 1}, ZPoly{1, 2}), DomainError);
  EXPECT_THROW(divrem(ZPoly{1}, ZPoly()), DomainError);
}

TEST(Poly, GcdOverRationals) {
  const QPoly a = to_rational(ZPoly{-1, 0, 1});  // (z-1)(z+1)
  const QPoly b = to_rational(ZPoly{-2, 1, 1});  // (z-1)(z+2)
  EXPECT_EQ(gcd(a, b), to_rational(ZPoly{-1, 1}));
  EXPECT_EQ(gcd(a, QPoly()), a);
  for (int trial = 0; trial < 50; ++trial) {
    const ZPoly g = random_zpoly(static_cast<int>(uniform(1, 3)), 5) + ZPoly::monomial(1, 4);
    const QPoly x = to_rational(g * random_zpoly(2, 5)), y = to_rational(g * random_zpoly(3, 5));
    if (x.is_zero() || y.is_zero()) continue;
    const QPoly d = gcd(x, y);
    EXPECT_TRUE(divides(d, x));
    EXPECT_TRUE(divides(d, y));
    EXPECT_TRUE(divides(d, to_rational(g)) || divides(to_rational(g), d));
    EXPECT_GE(d.degree(), g.degree());
  }
}

TEST(Poly, ClearDenominators) {
  const QPoly p(std::vector<BigRat>{BigRat(1, 2), BigRat(2, 3)});
  const auto [k, q] = clear_denominators(p);
  EXPECT_EQ(k, 6);
  EXPECT_EQ(q, (ZPoly{3, 4}));
  EXPECT_THROW(to_integer(p), DomainError);
}

TEST(Cyclotomic, KnownValues) {
  EXPECT_EQ(cyclotomic(1), (ZPoly{-1, 1}));
  EXPECT_EQ(cyclotomic(4), (ZPoly{1, 0, 1}));
  EXPECT_EQ(cyclotomic(6), (ZPoly{1, -1, 1}));
  EXPECT_EQ(cyclotomic(12), (ZPoly{1, 0, -1, 0, 1}));
  EXPECT_THROW(cyclotomic(0), DomainError);
}

TEST(Cyclotomic, MatchesRootProductAndDivisorIdentity) {
  for (int k = 1; k <= 30; ++k) {
    EXPECT_EQ(cyclotomic(k), cyclotomic_numeric(k)) << k;
    EXPECT_EQ(cyclotomic(k).degree(), totient(k));
    ZPoly prod{1};
    for (long d : divisors(k)) prod *= cyclotomic(static_cast<int>(d));
    EXPECT_EQ(prod, ZPoly::monomial(1, k) - ZPoly{1}) << k;
  }
}

TEST(Companion, CharpolyConventionAndEvaluation) {
  const ZPoly f{-1, -1, 1};
  EXPECT_EQ(companion(f), zmat({{0, 1}, {1, 1}}));
  for (int trial = 0; trial < 30; ++trial) {
    const ZPoly g = random_zpoly(static_cast<int>(uniform(0, 4)), 6) + ZPoly::monomial(1, 5);
    EXPECT_TRUE(is_zero(evaluate(g, companion(g))));
  }
  EXPECT_THROW(companion(ZPoly{1, 2}), DomainError);
}

TEST(NumberTheory, TrialFactor) {
  const Factorization f = trial_factor(BigInt(-360));
  EXPECT_TRUE(f.complete);
  EXPECT_EQ(f.valuation(2), 3);
  EXPECT_EQ(f.valuation(3), 2);
  EXPECT_EQ(f.valuation(5), 1);
  EXPECT_EQ(f.valuation(7), 0);

  const BigInt big_prime("1000000000000000003");  // above bound^2 for bound 1000
  const Factorization g = trial_factor(big_prime * 4, 1000);
  EXPECT_FALSE(g.complete);
  EXPECT_EQ(g.cofactor, big_prime);
  EXPECT_THROW(trial_factor(BigInt(0)), DomainError);

  for (std::uint64_t n = 0; n < 2000; ++n) {
    bool oracle = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) oracle = false;
    EXPECT_EQ(is_prime(n), oracle) << n;
  }
}

}  // namespace
}  // namespace algact
