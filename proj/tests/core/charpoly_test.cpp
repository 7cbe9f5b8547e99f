#include "algact/charpoly.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace algact {
namespace {

using testing::laplace_charpoly;
using testing::random_qmat;
using testing::random_zmat;
using testing::uniform;

// Oracle: minimal polynomial as the first linear dependency among the
// flattened powers I, M, M^2, ...
QPoly minimal_polynomial_by_powers(const QMat& m) {
  const Eigen::Index n = m.rows();
  std::vector<QMat> powers{identity<BigRat>(n)};
  for (;;) {
    powers.push_back(powers.back() * m);
    const auto d = static_cast<Eigen::Index>(powers.size());
    QMat cols(n * n, d);
    for (Eigen::Index k = 0; k < d; ++k)
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) cols(i * n + j, k) = powers[static_cast<std::size_t>(k)](i, j);
    const QMat ker = nullspace(cols);
    if (ker.cols() == 0) continue;
    std::vector<BigRat> c(static_cast<std::size_t>(d));
    for (Eigen::Index k = 0; k < d; ++k) c[static_cast<std::size_t>(k)] = ker(k, 0);
    return monic(QPoly(std::move(c)));
  }
}

TEST(Charpoly, SpecExamples) {
  EXPECT_EQ(charpoly(zmat({{2, 1}, {1, 1}})), (ZPoly{1, -3, 1}));
  EXPECT_EQ(charpoly(zmat({{0, 1}, {1, 1}})), (ZPoly{-1, -1, 1}));
  EXPECT_EQ(charpoly(zmat({{5}})), (ZPoly{-5, 1}));
}

TEST(Charpoly, MatchesCofactorExpansion) {
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = uniform(1, 5);
    const QMat m = random_qmat(n, 7, 4);
    EXPECT_EQ(charpoly(m), laplace_charpoly(m));
  }
}

TEST(Charpoly, IntegerAndRationalAgree) {
  for (int trial = 0; trial < 40; ++trial) {
    const ZMat m = random_zmat(uniform(1, 6), uniform(1, 6), 9);
    if (m.rows() != m.cols()) continue;
    EXPECT_EQ(to_rational(charpoly(m)), charpoly(to_rational(m)));
  }
}

TEST(Charpoly, CayleyHamiltonAndDeterminant) {
  for (Eigen::Index n = 1; n <= 8; ++n) {
    const ZMat m = random_zmat(n, n, 9);
    const ZPoly p = charpoly(m);
    EXPECT_TRUE(is_zero(evaluate(p, m))) << n;
    const BigInt sign = (n % 2 == 0) ? 1 : -1;
    EXPECT_EQ(p.coeff(0), sign * determinant(m));
  }
}

TEST(InvariantFactors, ProductDivisibilityAndMinimalPolynomial) {
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = uniform(1, 5);
    // Small-range entries produce repeated eigenvalues and nontrivial chains.
    QMat m = random_qmat(n, 1, 1);
    if (trial % 3 == 0) m = QMat::Identity(n, n) * BigRat(uniform(-2, 2));
    const auto f = poly_invariant_factors(m);
    QPoly prod = to_rational(ZPoly{1});
    for (std::size_t i = 0; i < f.size(); ++i) {
      EXPECT_TRUE(f[i].is_monic());
      EXPECT_GE(f[i].degree(), 1);
      if (i + 1 < f.size()) EXPECT_TRUE(divides(f[i], f[i + 1]));
      prod *= f[i];
    }
    EXPECT_EQ(prod, charpoly(m));
    EXPECT_EQ(minimal_polynomial(m), minimal_polynomial_by_powers(m));
  }
}

TEST(InvariantFactors, KnownChainsAndSimilarityInvariance) {
  // Scalar 2 on Q^3: three copies of z - 2.
  const auto f = poly_invariant_factors(zmat({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
  ASSERT_EQ(f.size(), 3u);
  for (const auto& x : f) EXPECT_EQ(x, to_rational(ZPoly{-2, 1}));
  // A Jordan block and a singleton: (z-1), (z-1)^2.
  const auto g = poly_invariant_factors(zmat({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}));
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], to_rational(ZPoly{-1, 1}));
  EXPECT_EQ(g[1], to_rational(ZPoly{1, -2, 1}));

  for (int trial = 0; trial < 20; ++trial) {
    const auto n = uniform(2, 4);
    const ZMat m = random_zmat(n, n, 1);
    const ZMat u = testing::random_unimodular(n);
    const QMat conj = to_rational(u) * to_rational(m) * inverse(to_rational(u));
    EXPECT_EQ(poly_invariant_factors(conj), poly_invariant_factors(m));
  }
}

}  // namespace
}  // namespace algact
