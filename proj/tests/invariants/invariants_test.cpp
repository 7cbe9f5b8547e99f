#include "algact/invariants.hpp"

#include <gtest/gtest.h>

#include "algact/charpoly.hpp"
#include "algact/number_theory.hpp"
#include "test_util.hpp"

namespace algact {
namespace {

using testing::uniform;

QMat strictly_upper(Eigen::Index n, long bound) {
  QMat m = QMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) m(i, j) = uniform(-bound, bound);
  return m;
}

QMat conjugate_by_unimodular(const ZMat& m) {
  const ZMat u = testing::random_unimodular(m.rows());
  return to_rational(u) * to_rational(m) * inverse(to_rational(u));
}

ZMat block_diag(const ZMat& a, const ZMat& b) {
  ZMat m = ZMat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

BigInt squarefree_part(BigInt d) {
  const int sign = d < 0 ? -1 : 1;
  BigInt out = sign;
  for (const auto& [p, e] : trial_factor(d).factors)
    if (e % 2) out *= p;
  return out;
}

TEST(Conjugacy, Examples) {
  EXPECT_TRUE(q_conjugate(zmat({{2, 0}, {0, 3}}), companion(ZPoly{6, -5, 1})));
  EXPECT_FALSE(q_conjugate(zmat({{2, 0}, {0, 2}}), zmat({{2, 1}, {0, 2}})));
  EXPECT_FALSE(q_conjugate(zmat({{2}}), zmat({{2, 0}, {0, 2}})));
  for (int trial = 0; trial < 30; ++trial) {
    const ZMat m = testing::random_zmat(3, 3, 3);
    EXPECT_TRUE(q_conjugate(to_rational(m), conjugate_by_unimodular(m)));
    EXPECT_TRUE(q_conjugate(m, ZMat(m.transpose())));
  }
}

TEST(Conjugacy, EquivalenceOnABatch) {
  // Small entries give many coincident classes.
  std::vector<ZMat> batch;
  for (int i = 0; i < 12; ++i) batch.push_back(testing::random_zmat(2, 2, 1));
  for (const auto& a : batch)
    for (const auto& b : batch)
      for (const auto& c : batch) {
        EXPECT_TRUE(q_conjugate(a, a));
        EXPECT_EQ(q_conjugate(a, b), q_conjugate(b, a));
        if (q_conjugate(a, b) && q_conjugate(b, c)) EXPECT_TRUE(q_conjugate(a, c));
      }
}

TEST(Torsion, Examples) {
  EXPECT_EQ(torsion_order(zmat({{0, -1}, {1, 0}})), 4);
  EXPECT_EQ(torsion_order(zmat({{1, 1}, {0, 1}})), std::nullopt);
  EXPECT_EQ(torsion_order(zmat({{0, -1}, {1, -1}})), 3);
  EXPECT_EQ(torsion_order(zmat({{2}})), std::nullopt);
  EXPECT_EQ(torsion_order(identity<BigInt>(3)), 1);
  EXPECT_THROW(torsion_order(zmat({{1, 1}, {1, 1}})), DomainError);
}

TEST(Torsion, OrderIsExact) {
  for (int trial = 0; trial < 30; ++trial) {
    const int a = static_cast<int>(uniform(1, 12)), b = static_cast<int>(uniform(1, 12));
    const ZMat m = block_diag(companion(cyclotomic(a)), companion(cyclotomic(b)));
    const ZMat u = testing::random_unimodular(m.rows());
    const ZMat conj = *to_integer(QMat(to_rational(u) * to_rational(m) * inverse(to_rational(u))));
    const auto n = torsion_order(conj);
    ASSERT_TRUE(n);
    EXPECT_EQ(*n, std::lcm(a, b));
    const long order = to_i64(*n);
    EXPECT_EQ(power(conj, static_cast<unsigned long>(order)), identity<BigInt>(m.rows()));
    for (long d : divisors(order))
      if (d < order) EXPECT_NE(power(conj, static_cast<unsigned long>(d)), identity<BigInt>(m.rows()));
  }
  // A Jordan block at a root of unity has infinite order.
  EXPECT_EQ(torsion_order(zmat({{-1, 1}, {0, -1}})), std::nullopt);
}

TEST(LogExp, Examples) {
  EXPECT_EQ(unipotent_log(qmat({{1, 1}, {0, 1}})), qmat({{0, 1}, {0, 0}}));
  EXPECT_EQ(nilpotent_exp(qmat({{0, 1}, {0, 0}})), qmat({{1, 1}, {0, 1}}));
  QMat expected = qmat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  expected(0, 2) = BigRat(-1, 2);
  EXPECT_EQ(unipotent_log(qmat({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}})), expected);
  EXPECT_THROW(unipotent_log(qmat({{2}})), DomainError);
  EXPECT_THROW(nilpotent_exp(qmat({{1}})), DomainError);
}

TEST(LogExp, MutuallyInverseAndAdditive) {
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = uniform(1, 6);
    const QMat nil = conjugate_by_unimodular(*to_integer(strictly_upper(n, 3)));
    const QMat alpha = nilpotent_exp(nil);
    EXPECT_EQ(unipotent_log(alpha), nil);
    EXPECT_EQ(nilpotent_exp(unipotent_log(alpha)), alpha);
    // Commuting pair: two polynomials in the same nilpotent.
    const QMat other = nilpotent_exp(QMat(BigRat(uniform(-3, 3)) * nil + BigRat(uniform(-3, 3)) * nil * nil));
    EXPECT_EQ(unipotent_log(QMat(alpha * other)), unipotent_log(alpha) + unipotent_log(other));
  }
}

TEST(RankBound, Examples) {
  const auto one = rank_bound_check({qmat({{1, 1}, {0, 1}})});
  EXPECT_EQ(one.rank, 1);
  EXPECT_EQ(one.kernel_dim, 1);
  EXPECT_EQ(one.bound, 2);
  EXPECT_TRUE(one.holds);

  const auto two = rank_bound_check({qmat({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}), qmat({{1, 0, 0}, {0, 1, 1}, {0, 0, 1}})});
  EXPECT_EQ(two.rank, 2);
  EXPECT_EQ(two.span_dim, 2);
  EXPECT_EQ(two.kernel_dim, 2);
  EXPECT_EQ(two.bound, 3);
  EXPECT_TRUE(two.holds);

  const auto trivial = rank_bound_check({identity<BigRat>(3)});
  EXPECT_TRUE(trivial.trivial);
  EXPECT_EQ(trivial.rank, 0);
  EXPECT_EQ(trivial.bound, 0);

  EXPECT_THROW(rank_bound_check({qmat({{1, 1}, {0, 1}}), qmat({{1, 0}, {1, 1}})}), DomainError);
  EXPECT_THROW(rank_bound_check({qmat({{2}})}), DomainError);
}

TEST(RankBound, ClosureIdentityAndRandomFamilies) {
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = uniform(2, 4);
    const QMat nil = strictly_upper(n, 2);
    std::vector<QMat> fam;
    std::vector<QMat> expected_logs;
    for (int i = 0; i < 3; ++i) {
      const QMat p = BigRat(uniform(-2, 2)) * nil + BigRat(uniform(-2, 2)) * nil * nil;
      expected_logs.push_back(p);
      fam.push_back(nilpotent_exp(p));
    }
    for (const auto& a : fam)
      for (const auto& b : fam) {
        const QMat id = identity<BigRat>(n);
        EXPECT_EQ(QMat((a - id) * (b - id)), QMat((a * b - id) - (a - id) - (b - id)));
      }
    const auto r = rank_bound_check(fam);
    QMat flat(3, n * n);
    for (int i = 0; i < 3; ++i)
      for (Eigen::Index x = 0; x < n; ++x)
        for (Eigen::Index y = 0; y < n; ++y) flat(i, x * n + y) = expected_logs[static_cast<std::size_t>(i)](x, y);
    EXPECT_EQ(r.rank, rank(flat));
    EXPECT_TRUE(r.holds);
  }
}

TEST(PowerWitness, Examples) {
  const auto id = unipotent_power_witness(identity<BigRat>(2), 2, qmat({{3, 1}, {1, 1}}), 2);
  EXPECT_TRUE(is_zero(id.eta));
  EXPECT_TRUE(id.nilpotent);

  const auto w = unipotent_power_witness(qmat({{1, 1}, {0, 1}}), 2, qmat({{2, 0}, {0, 1}}), 2);
  EXPECT_EQ(w.m, 3);
  EXPECT_EQ(w.eta, qmat({{0, 3}, {0, 0}}));
  EXPECT_TRUE(w.nilpotent);
  EXPECT_EQ(w.nilpotency_index, 2);
  EXPECT_EQ(w.orientation, "gamma alpha gamma^-1 = alpha^kappa");

  // The other orientation: gamma = diag(1, 2).
  const auto v = unipotent_power_witness(qmat({{1, 1}, {0, 1}}), 2, qmat({{1, 0}, {0, 2}}), 2);
  EXPECT_EQ(v.orientation, "alpha = gamma alpha^kappa gamma^-1");

  EXPECT_THROW(unipotent_power_witness(qmat({{0, -1}, {1, 0}}), 3, identity<BigRat>(2), 2), DomainError);
}

TEST(Distinguisher, Examples) {
  const auto a = splitting_signature_distinguisher(ZPoly{1, 0, 1}, ZPoly{-2, 0, 1});
  EXPECT_EQ(a.status, DistinguisherVerdict::Status::DistinguishedAtPrime);
  EXPECT_EQ(a.prime, 5u);
  EXPECT_EQ(a.sig_f.degrees, (std::vector<int>{1, 1}));
  EXPECT_EQ(a.sig_g.degrees, (std::vector<int>{2}));

  EXPECT_EQ(splitting_signature_distinguisher(ZPoly{-2, 0, 1}, ZPoly{-8, 0, 1}, 100).status,
            DistinguisherVerdict::Status::Indistinguishable);
  EXPECT_EQ(splitting_signature_distinguisher(ZPoly{1, 1, 1}, ZPoly{3, 0, 1}).status,
            DistinguisherVerdict::Status::Indistinguishable);
  EXPECT_EQ(splitting_signature_distinguisher(ZPoly{1, 0, 1}, ZPoly{-2, 0, 0, 1}).status,
            DistinguisherVerdict::Status::DistinguishedByDegree);
  EXPECT_THROW(splitting_signature_distinguisher(ZPoly{-1, 0, 1}, ZPoly{1, 0, 1}), DomainError);
}

TEST(Distinguisher, QuadraticFieldsOracle) {
  // Q(sqrt D1) = Q(sqrt D2) iff D1 / D2 is a rational square.
  int distinguished = 0, different = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const long b1 = uniform(-6, 6), c1 = uniform(-20, 20), b2 = uniform(-6, 6), c2 = uniform(-20, 20);
    const BigInt d1 = b1 * b1 - 4 * c1, d2 = b2 * b2 - 4 * c2;
    if (d1 == 0 || d2 == 0) continue;
    const BigInt s1 = squarefree_part(d1), s2 = squarefree_part(d2);
    if (s1 == 1 || s2 == 1) continue;  // reducible
    const auto v = splitting_signature_distinguisher(ZPoly{c1, b1, 1}, ZPoly{c2, b2, 1});
    const bool same_field = s1 == s2;
    if (same_field) EXPECT_EQ(v.status, DistinguisherVerdict::Status::Indistinguishable);
    if (!same_field) {
      ++different;
      distinguished += v.status == DistinguisherVerdict::Status::DistinguishedAtPrime;
    }
  }
  EXPECT_EQ(distinguished, different);
}

TEST(Distinguisher, SoundUnderChangeOfVariable) {
  // f(z + c) and a^d f(z / a) define the same field as f.
  const std::vector<ZPoly> fs{ZPoly{-2, 0, 0, 1}, ZPoly{1, -1, 0, 1}, ZPoly{3, 1, 0, 1}, ZPoly{-5, 0, 1}};
  for (const auto& f : fs)
    for (long c = -3; c <= 3; ++c) {
      ZPoly shifted;
      ZPoly lin{c, 1};
      ZPoly pw{1};
      for (int i = 0; i <= f.degree(); ++i) {
        shifted += f.coeff(i) * pw;
        pw *= lin;
      }
      EXPECT_EQ(splitting_signature_distinguisher(f, shifted).status, DistinguisherVerdict::Status::Indistinguishable);
      const long a = std::abs(c) + 1;
      std::vector<BigInt> scaled;
      BigInt ap = 1;
      for (int i = f.degree(); i >= 0; --i) {
        scaled.insert(scaled.begin(), f.coeff(i) * ap);
        ap *= a;
      }
      EXPECT_EQ(splitting_signature_distinguisher(f, ZPoly(scaled)).status,
                DistinguisherVerdict::Status::Indistinguishable);
    }
}

}  // namespace
}  // namespace algact
