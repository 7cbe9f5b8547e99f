#include "algact/modpoly.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "test_util.hpp"

namespace algact {
namespace {

using testing::uniform;

// Oracle: degrees of the irreducible factors of a squarefree monic g over
// F_p, found by trial division by every monic polynomial of small degree.
std::vector<int> factor_degrees_brute(ModPoly g) {
  std::vector<int> out;
  const std::uint64_t p = g.modulus();
  while (g.degree() > 0) {
    bool split = false;
    for (int d = 1; 2 * d <= g.degree() && !split; ++d) {
      std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1, 0);
      c[static_cast<std::size_t>(d)] = 1;
      std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == d) {
          const ModPoly h(p, c);
          auto [q, r] = divrem(g, h);
          if (!r.is_zero()) return false;
          out.push_back(d);
          g = q;
          return true;
        }
        for (std::uint64_t a = 0; a < p; ++a) {
          c[static_cast<std::size_t>(i)] = a;
          if (rec(i + 1)) return true;
        }
        return false;
      };
      split = rec(0);
    }
    if (!split) {
      out.push_back(g.degree());
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Ddf, SpecExamples) {
  const ZPoly f{1, 0, 1};
  EXPECT_EQ(ddf_signature(f, 5), (SplitSignature{false, {1, 1}}));
  EXPECT_EQ(ddf_signature(f, 3), (SplitSignature{false, {2}}));
  EXPECT_TRUE(ddf_signature(f, 2).ramified);
  EXPECT_EQ(to_string(ddf_signature(f, 5)), "{1,1}");
  EXPECT_EQ(to_string(ddf_signature(f, 2)), "ramified");
}

TEST(Ddf, RejectsBadInput) {
  EXPECT_THROW(ddf_signature(ZPoly{1, 0, 1}, 4), DomainError);
  EXPECT_THROW(ddf_signature(ZPoly{3}, 5), DomainError);
  EXPECT_THROW(ddf_signature(ZPoly{1, 0, 5}, 5), DomainError);
}

TEST(Ddf, MatchesBruteForceFactorization) {
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    for (int trial = 0; trial < 40; ++trial) {
      const int n = static_cast<int>(uniform(1, 6));
      std::vector<BigInt> c;
      for (int i = 0; i < n; ++i) c.emplace_back(uniform(-20, 20));
      c.emplace_back(1);
      const ZPoly f(std::move(c));
      const SplitSignature s = ddf_signature(f, p);
      const ModPoly g = ModPoly::reduce(f, p);
      const bool squarefree = gcd(g, g.derivative()).degree() == 0;
      EXPECT_EQ(s.ramified, !squarefree);
      if (!squarefree) continue;
      EXPECT_EQ(s.degrees, factor_degrees_brute(g)) << f.to_string() << " mod " << p;
      int sum = 0, linear = 0;
      for (int d : s.degrees) sum += d, linear += (d == 1);
      EXPECT_EQ(sum, n);
      int roots = 0;
      for (std::uint64_t a = 0; a < p; ++a)
        if (mod_floor(f(BigInt(a)), BigInt(p)) == 0) ++roots;
      EXPECT_EQ(linear, roots);
    }
  }
}

TEST(Ddf, LargePrime) {
  // z^2 - 2 splits mod p exactly when 2 is a square, i.e. p = +-1 mod 8.
  const ZPoly f{-2, 0, 1};
  EXPECT_EQ(ddf_signature(f, 1000000007).degrees, (std::vector<int>{1, 1}));
  EXPECT_EQ(ddf_signature(f, 1000000021).degrees, (std::vector<int>{2}));
}

}  // namespace
}  // namespace algact
