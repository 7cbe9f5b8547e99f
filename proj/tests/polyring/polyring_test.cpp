#include "algact/polyring.hpp"

#include <gtest/gtest.h>

#include "algact/charpoly.hpp"
#include "test_util.hpp"

namespace algact {
namespace {

using testing::uniform;

const std::vector<std::string> kU{"u"};
const std::vector<std::string> kUV{"u", "v"};

MPoly P(const std::string& s, const std::vector<std::string>& vars = kUV) { return parse_poly(s, vars); }

ZPoly random_monic(int degree, long bound) {
  std::vector<BigInt> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(uniform(-bound, bound));
  c.emplace_back(1);
  return ZPoly(c);
}

// f(x) as an MPoly in variable `var` of `n`.
MPoly lift(const ZPoly& f, std::size_t n, std::size_t var) {
  MPoly p(n);
  for (int i = 0; i <= f.degree(); ++i) {
    Exponent e(n, 0);
    e[var] = i;
    p.add_term(e, BigRat(f.coeff(i)));
  }
  return p;
}

MPoly random_mpoly(std::size_t n, int degree, long bound) {
  MPoly p(n);
  for (int t = 0; t < 4; ++t) {
    Exponent e(n, 0);
    int left = static_cast<int>(uniform(0, degree));
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = static_cast<int>(uniform(0, left));
      left -= e[i];
    }
    p.add_term(e, BigRat(uniform(-bound, bound)));
  }
  return p;
}

QMat kron(const QMat& a, const QMat& b) {
  QMat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return k;
}

TEST(ParsePoly, Examples) {
  const MPoly f = parse_poly("u^2 - u - 1", kU);
  EXPECT_EQ(f.terms().size(), 3u);
  EXPECT_EQ(f.coeff({2}), 1);
  EXPECT_EQ(f.coeff({1}), -1);
  EXPECT_EQ(f.coeff({0}), -1);

  const MPoly g = P("u*v - 3");
  EXPECT_EQ(g.terms().size(), 2u);
  EXPECT_EQ(g.coeff({1, 1}), 1);
  EXPECT_EQ(g.coeff({0, 0}), -3);

  try {
    parse_poly("u +", kU);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
  try {
    parse_poly("u + w", kUV);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
  EXPECT_THROW(parse_poly("(u + 1", kU), ParseError);
  EXPECT_THROW(parse_poly("u / u", kU), ParseError);
  EXPECT_THROW(parse_poly("u ^ v", kUV), ParseError);
}

TEST(ParsePoly, ArithmeticAgreesWithOperators) {
  EXPECT_EQ(P("(u + v)^2"), P("u^2 + 2*u*v + v^2"));
  EXPECT_EQ(P("3/4*u - -v"), BigRat(3, 4) * P("u") + P("v"));
  EXPECT_EQ(P("-u^2"), -P("u*u"));
  EXPECT_EQ(P("(u - 1)*(u + 1) - u^2 + 1"), MPoly(2));
  // Round trip through the printer.
  for (int t = 0; t < 50; ++t) {
    const MPoly p = random_mpoly(2, 4, 9);
    EXPECT_EQ(P(p.to_string(kUV)), p) << p.to_string(kUV);
  }
}

TEST(Buchberger, Examples) {
  EXPECT_EQ(buchberger({P("u^2 - 2", kU)}), std::vector<MPoly>{P("u^2 - 2", kU)});
  const std::vector<MPoly> gb = buchberger({P("u^2 - 2"), P("v^2 - 3")});
  EXPECT_EQ(gb, (std::vector<MPoly>{P("u^2 - 2"), P("v^2 - 3")}));
  EXPECT_EQ(buchberger({P("u - v"), P("v^2 - 1")}, MonomialOrder::Lex), (std::vector<MPoly>{P("u - v"), P("v^2 - 1")}));
  // Reduced output for a redundant input.
  EXPECT_EQ(buchberger({P("2*u^2 - 4"), P("u^3 - 2*u"), P("v^2 - 3"), P("u^2*v - 2*v")}),
            (std::vector<MPoly>{P("u^2 - 2"), P("v^2 - 3")}));
  EXPECT_EQ(buchberger({P("u - 1"), P("u - 2")}), std::vector<MPoly>{MPoly::constant(2, 1)});
}

TEST(Buchberger, ReducedAndCanonical) {
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 3));
    std::vector<MPoly> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_mpoly(n, 3, 5));
    if (std::all_of(gens.begin(), gens.end(), [](const MPoly& g) { return g.is_zero(); })) continue;
    for (MonomialOrder order : {MonomialOrder::DegRevLex, MonomialOrder::Lex}) {
      const std::vector<MPoly> gb = buchberger(gens, order);
      for (const MPoly& g : gb) {
        EXPECT_EQ(g.lead(order).second, 1);
        // No term of g is divisible by another leading monomial.
        for (const MPoly& h : gb) {
          if (&g == &h) continue;
          for (const auto& [e, c] : g.terms()) EXPECT_FALSE(divides(h.lead(order).first, e));
        }
      }
      // The generators are members.
      for (const MPoly& g : gens) EXPECT_TRUE(normal_form(g, gb, order).is_zero());
      // Shuffled, rescaled input gives the same reduced basis.
      std::vector<MPoly> other(gens.rbegin(), gens.rend());
      for (auto& g : other) g = BigRat(uniform(1, 5), uniform(1, 5)) * g;
      if (other.size() > 1) other.push_back(other[0] + other[1]);
      EXPECT_EQ(buchberger(other, order), gb);
    }
  }
}

TEST(NormalForm, LinearProjectionAndMembership) {
  for (int t = 0; t < 20; ++t) {
    const ZPoly f = random_monic(static_cast<int>(uniform(1, 3)), 4);
    const ZPoly g = random_monic(static_cast<int>(uniform(1, 3)), 4);
    std::vector<MPoly> gens{lift(f, 2, 0) + random_mpoly(2, 1, 3), lift(g, 2, 1)};
    gens.push_back(gens[0] * P("u + v") + gens[1]);
    const auto gb = buchberger(gens);
    for (int k = 0; k < 10; ++k) {
      const MPoly a = random_mpoly(2, 4, 6), b = random_mpoly(2, 4, 6);
      const MPoly na = normal_form(a, gb, MonomialOrder::DegRevLex);
      EXPECT_EQ(normal_form(na, gb, MonomialOrder::DegRevLex), na);
      EXPECT_EQ(normal_form(a + b, gb, MonomialOrder::DegRevLex), na + normal_form(b, gb, MonomialOrder::DegRevLex));
      // A random ideal combination has normal form zero; adding it changes nothing.
      MPoly member(2);
      for (const MPoly& h : gens) member = member + random_mpoly(2, 2, 4) * h;
      EXPECT_TRUE(normal_form(member, gb, MonomialOrder::DegRevLex).is_zero());
      EXPECT_EQ(normal_form(a + member, gb, MonomialOrder::DegRevLex), na);
    }
  }
}

TEST(ZeroDimensional, Examples) {
  EXPECT_TRUE(is_zero_dimensional(buchberger({P("u^2 - 2"), P("v^2 - 3")}), MonomialOrder::DegRevLex));
  EXPECT_FALSE(is_zero_dimensional(buchberger({P("u*v")}), MonomialOrder::DegRevLex));
  EXPECT_TRUE(is_zero_dimensional(buchberger({P("u^2 - u - 1", kU)}), MonomialOrder::DegRevLex));
  EXPECT_FALSE(is_zero_dimensional(buchberger({P("u^2 - v^2")}), MonomialOrder::Lex));
  EXPECT_THROW(quotient_algebra({P("u*v")}), DomainError);
}

TEST(QuotientAlgebra, Examples) {
  const QuotientAlgebra q1 = quotient_algebra({P("u^2 - u - 1", kU)});
  EXPECT_EQ(q1.staircase(), (std::vector<Exponent>{{0}, {1}}));
  EXPECT_EQ(q1.T(0), qmat({{0, 1}, {1, 1}}));

  const QuotientAlgebra q2 = quotient_algebra({P("u^2 - 2"), P("v^2 - 3")});
  EXPECT_EQ(q2.staircase(), (std::vector<Exponent>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(q2.dim(), 4u);

  const QuotientAlgebra q3 = quotient_algebra({P("u - 5", kU)});
  EXPECT_EQ(q3.dim(), 1u);
  EXPECT_EQ(q3.T(0), qmat({{5}}));
}

TEST(QuotientAlgebra, PrincipalIdealGivesCompanion) {
  for (int t = 0; t < 30; ++t) {
    const ZPoly f = random_monic(static_cast<int>(uniform(1, 6)), 7);
    const QuotientAlgebra qa = quotient_algebra({lift(f, 1, 0)});
    EXPECT_EQ(qa.T(0), to_rational(companion(f)));
    EXPECT_EQ(char_poly_and_norm(qa, MPoly::variable(1, 0)).chi, to_rational(f));
  }
}

TEST(QuotientAlgebra, TensorProductOracle) {
  // Q[u,v]/(f(u), g(v)) is Q[u]/(f) (x) Q[v]/(g): T_uv is similar to the
  // Kronecker product of the companions, in either order.
  for (int t = 0; t < 15; ++t) {
    const ZPoly f = random_monic(static_cast<int>(uniform(1, 3)), 5);
    const ZPoly g = random_monic(static_cast<int>(uniform(1, 3)), 5);
    const QMat cf = to_rational(companion(f)), cg = to_rational(companion(g));
    for (MonomialOrder order : {MonomialOrder::DegRevLex, MonomialOrder::Lex}) {
      const QuotientAlgebra qa = quotient_algebra({lift(f, 2, 0), lift(g, 2, 1)}, order);
      ASSERT_EQ(qa.dim(), static_cast<std::size_t>(f.degree() * g.degree()));
      EXPECT_EQ(char_poly_and_norm(qa, P("u*v")).chi, charpoly(QMat(kron(cf, cg))));
      EXPECT_EQ(char_poly_and_norm(qa, P("u + 2*v")).chi,
                charpoly(QMat(kron(cf, identity<BigRat>(g.degree())) + 2 * kron(identity<BigRat>(f.degree()), cg))));
      EXPECT_EQ(char_poly_and_norm(qa, P("u")).norm,
                abs(BigRat(mp::pow(f.coeff(0), static_cast<unsigned>(g.degree())))));
    }
  }
}

TEST(QuotientAlgebra, TriangularIdealOracle) {
  // (u - p(v), q(v)): u acts as p(C_q).
  for (int t = 0; t < 15; ++t) {
    const ZPoly q = random_monic(static_cast<int>(uniform(1, 4)), 5);
    const ZPoly p = random_monic(static_cast<int>(uniform(0, 3)), 3);
    const QMat cq = to_rational(companion(q));
    const MPoly gen = P("u") - lift(p, 2, 1);
    for (MonomialOrder order : {MonomialOrder::DegRevLex, MonomialOrder::Lex}) {
      const QuotientAlgebra qa = quotient_algebra({gen, lift(q, 2, 1)}, order);
      ASSERT_EQ(qa.dim(), static_cast<std::size_t>(q.degree()));
      EXPECT_EQ(charpoly(qa.T(0)), charpoly(QMat(evaluate(to_rational(p), cq))));
    }
  }
}

TEST(QuotientAlgebra, MultiplicationMatrixProperties) {
  const std::vector<std::vector<std::string>> ideals{
      {"u^2 - 2", "v^2 - 3"}, {"u^2 - v", "v^2 - u - 1"}, {"u*v - 2", "u^2 + v^2 - 5"}, {"u^3 - v", "v^2 - 2*u*v - 1"}};
  for (const auto& spec : ideals) {
    std::vector<MPoly> gens;
    for (const auto& s : spec) gens.push_back(P(s));
    const QuotientAlgebra qa = quotient_algebra(gens);
    const auto d = static_cast<Eigen::Index>(qa.dim());
    EXPECT_EQ(qa.T(0) * qa.T(1), qa.T(1) * qa.T(0)) << spec[0];
    for (int k = 0; k < 8; ++k) {
      const MPoly f = random_mpoly(2, 3, 4);
      const QMat tf = qa.mult_matrix(f);
      // Column oracle: coordinates of f * b_j.
      for (Eigen::Index j = 0; j < d; ++j)
        EXPECT_EQ(tf.col(j), qa.coords(f * MPoly::monomial(qa.staircase()[static_cast<std::size_t>(j)])));
      const CharNorm cn = char_poly_and_norm(qa, f);
      EXPECT_EQ(cn.chi.degree(), d);
      EXPECT_TRUE(is_zero(evaluate(cn.chi, tf)));
      EXPECT_EQ(cn.chi, testing::laplace_charpoly(tf));
      // Depends only on the residue class.
      const MPoly g = f + random_mpoly(2, 2, 3) * gens[0];
      EXPECT_EQ(qa.mult_matrix(g), tf);
      // Ring homomorphism.
      const MPoly h = random_mpoly(2, 2, 3);
      EXPECT_EQ(qa.mult_matrix(f * h), tf * qa.mult_matrix(h));
      // det(I - T_f) != 0 iff 1 - f is injective.
      const QMat one_minus = identity<BigRat>(d) - tf;
      EXPECT_EQ(determinant(one_minus) != 0, nullspace(one_minus).cols() == 0);
    }
  }
}

TEST(QuotientAlgebra, OrderInvariance) {
  const std::vector<MPoly> gens{P("u^2 - v"), P("v^2 - u - 1")};
  const QuotientAlgebra a = quotient_algebra(gens, MonomialOrder::DegRevLex);
  const QuotientAlgebra b = quotient_algebra(gens, MonomialOrder::Lex);
  EXPECT_EQ(a.dim(), b.dim());
  for (const char* f : {"u", "v", "u*v + 1", "u^2 - 3*v"})
    EXPECT_EQ(char_poly_and_norm(a, P(f)).chi, char_poly_and_norm(b, P(f)).chi) << f;
}

TEST(CharNorm, Examples) {
  const auto golden = char_poly_and_norm(quotient_algebra({P("u^2 - u - 1", kU)}), P("u", kU));
  EXPECT_EQ(golden.chi, (QPoly{-1, -1, 1}));
  EXPECT_EQ(golden.norm, 1);
  EXPECT_EQ(char_poly_and_norm(quotient_algebra({P("u^2 - 2", kU)}), P("u", kU)).norm, 2);
  const QuotientAlgebra q = quotient_algebra({P("u^2 - 2"), P("v^2 - 3")});
  EXPECT_EQ(char_poly_and_norm(q, P("u")).norm, 4);
  EXPECT_EQ(char_poly_and_norm(q, P("v")).norm, 9);
  EXPECT_EQ(char_poly_and_norm(q, P("u*v")).chi, (QPoly{36, 0, -12, 0, 1}));
}

TEST(CommAlg, Examples) {
  const CommAlgReport r = commalg_conditions({P("u^2 - 2"), P("v^2 - 3")}, kUV);
  EXPECT_EQ(r.a, Decision::Yes);
  EXPECT_EQ(r.b, Decision::Yes);
  EXPECT_EQ(r.c, Decision::Yes);
  EXPECT_EQ(r.c_bound, 8);
  ASSERT_TRUE(r.c_witness);
  EXPECT_NE(*r.c_det, 0);
  EXPECT_EQ(r.d, Decision::Yes);
  EXPECT_EQ(r.norms, (std::vector<BigRat>{4, 9}));
  EXPECT_EQ(r.d_primes, (std::vector<std::optional<BigInt>>{BigInt(2), BigInt(3)}));
  EXPECT_FALSE(r.gap_note.empty());
  // u*v is also a witness: chi_uv = (z^2 - 6)^2.
  const QuotientAlgebra q = quotient_algebra({P("u^2 - 2"), P("v^2 - 3")});
  EXPECT_EQ(determinant(QMat(identity<BigRat>(4) - q.mult_matrix(P("u*v")))), 25);

  const CommAlgReport g = commalg_conditions({P("u^2 - u - 1", kU)}, kU);
  EXPECT_EQ(g.a, Decision::Yes);
  EXPECT_EQ(g.norms, std::vector<BigRat>{1});
  EXPECT_EQ(g.d, Decision::No);

  const CommAlgReport z = commalg_conditions({P("u*v")}, kUV);
  EXPECT_EQ(z.a, Decision::No);
  EXPECT_FALSE(z.zero_dimensional);

  const CommAlgReport in = commalg_conditions({P("u"), P("v^2 - 2")}, kUV);
  EXPECT_EQ(in.a, Decision::No);
  EXPECT_EQ(in.vars_in_ideal, std::vector<std::size_t>{0});

  const CommAlgReport shared = commalg_conditions({P("u^2 - 6"), P("v^2 - 6")}, kUV);
  EXPECT_EQ(shared.d, Decision::No);

  // (c) fails when every monomial takes the value 1 at a common point.
  const CommAlgReport one = commalg_conditions({P("u - 1", kU)}, kU);
  EXPECT_EQ(one.c, Decision::Undetermined);
  EXPECT_FALSE(one.c_witness);

  const CommAlgReport frac = commalg_conditions({P("2*u - 1", kU)}, kU);
  EXPECT_EQ(frac.d, Decision::Undetermined);
}

TEST(Principal, Examples) {
  const PrincipalReport golden = principal_exactness(ZPoly{-1, -1, 1});
  EXPECT_EQ(golden.exact, Decision::No);
  EXPECT_FALSE(golden.non_automorphic);
  EXPECT_TRUE(golden.mixing);
  EXPECT_FALSE(golden.standing);

  const PrincipalReport two = principal_exactness(ZPoly{-2, 1});
  EXPECT_EQ(two.exact, Decision::Yes);
  EXPECT_TRUE(two.standing);

  const PrincipalReport cyc = principal_exactness(ZPoly{2, -3, 1});
  EXPECT_EQ(cyc.exact, Decision::No);
  EXPECT_FALSE(cyc.mixing);
  ASSERT_EQ(cyc.cyclotomic_factors.size(), 1u);
  EXPECT_EQ(cyc.cyclotomic_factors[0].order, 1);

  EXPECT_THROW(principal_exactness(ZPoly{1, 2}), DomainError);
  EXPECT_THROW(principal_exactness(ZPoly{0, 1}), DomainError);
}

TEST(Principal, AgreesWithQuotientCharpoly) {
  // chi_u of (f) is f, so the verdict matches the direct search on chi_u.
  for (int t = 0; t < 20; ++t) {
    ZPoly f = random_monic(static_cast<int>(uniform(1, 4)), 6);
    if (f.coeff(0) == 0) continue;
    const auto chi = char_poly_and_norm(quotient_algebra({lift(f, 1, 0)}), MPoly::variable(1, 0)).chi;
    const auto s = find_unit_factor(to_integer(chi));
    const PrincipalReport r = principal_exactness(f);
    EXPECT_EQ(r.exact == Decision::No, s.found == Decision::Yes);
    EXPECT_EQ(r.non_automorphic, abs(f.coeff(0)) > 1);
  }
}

}  // namespace
}  // namespace algact
