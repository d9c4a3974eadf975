#include "hopfrb/constructions.hpp"

#include <gtest/gtest.h>

using namespace hopfrb;

namespace {

const Field Q = Field::rationals();

Scalar n(Field f, long long v) { return Scalar::from_int(f, v); }

FamilyParams taft(unsigned m) {
  Field f = m <= 2 ? Q : Field::cyclotomic(m);
  return {m, zeta_power(f, m, 1), m, {}};
}

FamilyParams f3_params(std::vector<long long> coeffs) {
  Field f3 = Field::prime(3);
  FamilyParams p{2, n(f3, -1), 6, {}};
  for (auto c : coeffs) p.f.push_back(n(f3, c));
  return p;
}

// n choose k from factorials, as an independent value for zeta = 1
mpz_class binomial(unsigned p, unsigned q) {
  mpz_class a = 1, b = 1;
  for (unsigned i = 0; i < q; ++i) {
    a *= p - i;
    b *= i + 1;
  }
  return a / b;
}

}  // namespace

TEST(QBinomial, MatchesWordExpansion) {
  for (unsigned m : {2u, 3u, 4u, 5u, 6u}) {
    Field f = Field::cyclotomic(m);
    for (long long k = 0; k < m; ++k) {
      Scalar z = zeta_power(f, m, k);
      for (unsigned p = 0; p <= 8; ++p)
        for (unsigned q = 0; q <= p; ++q) EXPECT_EQ(qbinom(p, q, z), qbinom_oracle(p, q, z)) << m << p << q;
    }
  }
}

TEST(QBinomial, OrdinaryAtOne) {
  for (unsigned p = 0; p <= 12; ++p)
    for (unsigned q = 0; q <= p; ++q)
      EXPECT_EQ(qbinom(p, q, Scalar::one(Q)), Scalar::from_rational(Q, mpq_class(binomial(p, q)))) << p << " " << q;
}

TEST(QBinomial, SmallCasesByHand) {
  Field f3 = Field::cyclotomic(3);
  Scalar z = zeta_power(f3, 3, 1);
  // (u+v)^2 = u^2 + uv + vu + v^2 = u^2 + (1+z) uv + v^2
  EXPECT_EQ(qbinom(2, 1, z), Scalar::one(f3) + z);
  // at a primitive m-th root the interior coefficients of (u+v)^m vanish
  for (unsigned m = 2; m <= 8; ++m) {
    Scalar w = zeta_power(Field::cyclotomic(m), m, 1);
    for (unsigned q = 1; q < m; ++q) EXPECT_TRUE(qbinom(m, q, w).is_zero()) << m << " " << q;
  }
  EXPECT_THROW(qbinom(2, 3, z), std::invalid_argument);
}

TEST(QBinomial, Symmetry) {
  Scalar z = zeta_power(Field::cyclotomic(7), 7, 2);
  for (unsigned p = 0; p <= 9; ++p)
    for (unsigned q = 0; q <= p; ++q) EXPECT_EQ(qbinom(p, q, z), qbinom(p, p - q, z));
}

TEST(QBinomial, Cauchy) {
  for (unsigned m : {2u, 5u, 8u}) {
    Scalar z = zeta_power(Field::cyclotomic(m), m, 1);
    for (unsigned q = 0; q <= 6; ++q) EXPECT_TRUE(cauchy_check(q, z).passed()) << m << " " << q;
  }
}

TEST(Sweedler, Antipode) {
  HopfData h = sweedler_h4(Q);
  Vector x = basis(h, 2), gx = basis(h, 3);
  EXPECT_EQ(antipode(h, x), scaled(gx, n(Q, -1)));
  EXPECT_EQ(antipode(h, gx), x);
  EXPECT_EQ(antipode(h, antipode(h, x)), scaled(x, n(Q, -1)));
  EXPECT_TRUE(antipode_power(h, 4).is_identity());
  EXPECT_THROW(sweedler_h4(Field::prime(2)), FieldError);
}

TEST(Family, SweedlerIsTheSmallestCase) {
  FamilyParams p{2, n(Q, -1), 2, {}};
  HopfData fam = family(p);
  EXPECT_TRUE(check_hopf(fam).passed());
  // family basis g^a x^b at a*2+b: 1, x, g, gx
  EXPECT_TRUE(same_structure(permute_basis(fam, {0, 2, 1, 3}), sweedler_h4(Q)));
  EXPECT_EQ(fam.labels()[3], "g^1*x^1");
}

TEST(Family, TaftRelations) {
  for (unsigned m = 2; m <= 5; ++m) {
    FamilyParams p = taft(m);
    HopfData h = family(p);
    ASSERT_EQ(h.dim(), m * m);
    EXPECT_TRUE(check_hopf(h).passed()) << m;
    Vector g = basis(h, p.index(1, 0)), x = basis(h, p.index(0, 1));
    Vector gm = h.algebra.unit, xm = h.algebra.unit;
    for (unsigned i = 0; i < m; ++i) {
      gm = mul(h, gm, g);
      xm = mul(h, xm, x);
    }
    EXPECT_EQ(gm, h.algebra.unit);
    EXPECT_TRUE(is_zero(xm));
    EXPECT_EQ(mul(h, x, g), scaled(mul(h, g, x), p.zeta));
    EXPECT_TRUE(is_primitive(h, x, g));
    EXPECT_EQ(antipode_order(h), 2 * m);
  }
}

TEST(Family, PositiveCharacteristicInstances) {
  FamilyParams a4p = f3_params({});
  FamilyParams aq = f3_params({0, 0, 4});  // q^(p-1) x^2 with q = 2, p = 3
  for (const auto& p : {a4p, aq}) {
    auto hyp = family_hypotheses(p);
    EXPECT_TRUE(hyp.passed()) << hyp.identity_name;
    EXPECT_TRUE(hyp.check_passed("Delta(x^l - f(x)) = 0"));
    HopfData h = family(p);
    EXPECT_EQ(h.dim(), 12u);
    EXPECT_TRUE(check_hopf(h).passed());
  }
  // x^6 = x^2 in the second instance
  HopfData h = family(aq);
  Vector x = basis(h, aq.index(0, 1)), x6 = h.algebra.unit;
  for (int i = 0; i < 6; ++i) x6 = mul(h, x6, x);
  EXPECT_EQ(x6, basis(h, aq.index(0, 2)));
}

TEST(Family, HypothesisFailures) {
  auto r3 = family_hypotheses({2, n(Q, -1), 3, {}});
  EXPECT_FALSE(r3.check_passed("condition 3: {l choose q} = 0 for 1 < q < l"));
  EXPECT_FALSE(r3.check_passed("Delta(x^l - f(x)) = 0"));
  EXPECT_THROW(family({2, n(Q, -1), 3, {}}), PreconditionError);

  auto r4 = family_hypotheses(f3_params({0, 0, 0, 0, 1}));
  EXPECT_FALSE(r4.check_passed("condition 4: {p choose q} = 0 for 1 < q < p when a_p != 0"));
  EXPECT_FALSE(r4.check_passed("Delta(x^l - f(x)) = 0"));

  auto r1 = family_hypotheses({2, n(Q, -1), 2, {n(Q, 1)}});
  EXPECT_FALSE(r1.check_passed("condition 1: a_0 = 0"));
  EXPECT_FALSE(r1.check_passed("epsilon(x^l - f(x)) = 0"));

  Field f5 = Field::cyclotomic(5);
  auto rz = family_hypotheses({3, zeta_power(f5, 5, 1), 5, {}});
  EXPECT_FALSE(rz.check_passed("zeta^m = 1"));

  EXPECT_THROW(family_hypotheses({2, n(Q, -1), 0, {}}), std::invalid_argument);
  EXPECT_THROW(family_hypotheses({0, n(Q, -1), 2, {}}), std::invalid_argument);
  EXPECT_THROW(family_hypotheses({16, n(Q, 1), 17, {}}), DimensionError);
}

TEST(Family, AntipodeClosedFormMatchesMatrix) {
  std::vector<FamilyParams> all{taft(2), taft(3), taft(4), taft(5), f3_params({}), f3_params({0, 0, 4})};
  all.push_back({4, zeta_power(Field::cyclotomic(4), 4, 2), 2, {}});  // zeta of order 2 < m
  for (const auto& p : all) {
    HopfData h = family(p);
    for (unsigned a = 0; a < p.m; ++a)
      for (unsigned b = 0; b < p.l; ++b) {
        auto [c, idx] = antipode_closed_form(p, a, b);
        Vector want = scaled(basis(h, idx), c);
        EXPECT_EQ(h.antipode.column(p.index(a, b)), want) << "m=" << p.m << " a=" << a << " b=" << b;
      }
  }
  EXPECT_THROW(antipode_closed_form(taft(2), 2, 0), std::out_of_range);
}

TEST(Automorphisms, SweedlerGrid) {
  FamilyParams p{2, n(Q, -1), 2, {}};
  std::vector<Scalar> grid{n(Q, 1), n(Q, -1), n(Q, 2), Scalar::from_rational(Q, mpq_class(1, 3)), n(Q, 5)};
  auto hits = family_aut_search(p, grid, 2);
  ASSERT_EQ(hits.size(), grid.size());
  for (std::size_t i = 0; i < hits.size(); ++i) {
    EXPECT_EQ(hits[i].k, 1);
    EXPECT_TRUE(hits[i].c[0].is_zero());
    EXPECT_EQ(hits[i].c[1], grid[i]);
    auto v = family_aut_check(p, hits[i]);
    EXPECT_TRUE(v.conditions.passed());
  }
  EXPECT_EQ(family_aut_search(p, grid, 1), hits);
}

TEST(Automorphisms, RejectsNonMorphisms) {
  FamilyParams p{2, n(Q, -1), 2, {}};
  HopfData h = family(p);
  auto zero = family_aut_check(p, h, {1, {n(Q, 0), n(Q, 0)}});
  EXPECT_FALSE(zero.automorphism);
  EXPECT_FALSE(zero.morphism.check_passed("bijective"));
  auto scalar_x = family_aut_check(p, h, {0, {n(Q, 3), n(Q, 0)}});
  EXPECT_FALSE(scalar_x.automorphism);
  EXPECT_THROW(family_aut_check(p, h, {1, {n(Q, 1), n(Q, 1)}}), std::invalid_argument);
  EXPECT_THROW(family_aut_check(p, h, {1, {n(Q, 1)}}), std::invalid_argument);
}

TEST(Automorphisms, TaftThree) {
  FamilyParams p = taft(3);
  Field f = p.field();
  std::vector<Scalar> grid{n(f, 1), p.zeta, n(f, 2)};
  auto hits = family_aut_search(p, grid);
  ASSERT_EQ(hits.size(), 3u);
  for (const auto& c : hits) EXPECT_EQ(c.k, 1);
  // psi(x) = x^2 with psi(g) = g^2 fails the binomial condition and the check
  auto v = family_aut_check(p, {2, {n(f, 0), n(f, 0), n(f, 1)}});
  EXPECT_FALSE(v.automorphism);
  EXPECT_FALSE(v.conditions.passed());
}

TEST(Automorphisms, MatrixRoundTripAndComposition) {
  FamilyParams p{2, n(Q, -1), 2, {}};
  HopfData h = family(p);
  AutCandidate a{1, {n(Q, 0), n(Q, 2)}}, b{1, {n(Q, 0), n(Q, -3)}};
  LinearMap ma = aut_matrix(p, h, a), mb = aut_matrix(p, h, b);
  EXPECT_EQ(candidate_from_matrix(p, ma), a);
  auto comp = candidate_from_matrix(p, ma * mb);
  ASSERT_TRUE(comp.has_value());
  EXPECT_EQ(comp->c[1], n(Q, -6));
  EXPECT_TRUE(family_aut_check(p, h, *comp).automorphism);
  EXPECT_FALSE(candidate_from_matrix(p, h.antipode).has_value());
}
