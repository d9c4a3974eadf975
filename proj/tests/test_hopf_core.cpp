#include "hopfrb/constructions.hpp"
#include "hopfrb/hopf.hpp"

#include <gtest/gtest.h>

using namespace hopfrb;

namespace {

const Field Q = Field::rationals();

Scalar n(long long v) { return Scalar::from_int(Q, v); }

}  // namespace

TEST(Tensor, PackUnpackRoundTrip) {
  Tensor t(Q, {3, 4, 5});
  t.add({2, 3, 4}, n(7));
  t.add({0, 1, 2}, n(-1));
  t.add({0, 1, 2}, n(1));  // cancels
  EXPECT_EQ(t.entries().size(), 1u);
  EXPECT_EQ(t.at(std::vector<std::size_t>{2, 3, 4}), n(7));
  t.for_each([&](const Tensor::Index& k, const Scalar&) { EXPECT_EQ(k, (Tensor::Index{2, 3, 4})); });
}

TEST(Tensor, Limits) {
  EXPECT_THROW(Tensor(Q, std::vector<std::size_t>(9, 2)), DimensionError);
  EXPECT_THROW(Tensor(Q, {257}), DimensionError);
  EXPECT_NO_THROW(Tensor(Q, std::vector<std::size_t>(8, 256)));
  Tensor t(Q, {2, 2});
  EXPECT_THROW(t.add({2, 0}, n(1)), DimensionError);
}

TEST(LinearMap, InverseAndProduct) {
  LinearMap a(Q, 2, 2);
  a(0, 0) = n(2);
  a(0, 1) = n(1);
  a(1, 0) = n(1);
  a(1, 1) = n(1);
  auto inv = a.inverse();
  ASSERT_TRUE(inv.has_value());
  EXPECT_TRUE((a * *inv).is_identity());
  LinearMap s(Q, 2, 2);
  s(0, 0) = n(1);
  s(0, 1) = n(2);
  s(1, 0) = n(2);
  s(1, 1) = n(4);
  EXPECT_FALSE(s.invertible());
}

TEST(HopfCore, SweedlerRelationsByMultiplication) {
  HopfData h = sweedler_h4(Q);
  Vector one = basis(h, 0), g = basis(h, 1), x = basis(h, 2), gx = basis(h, 3);
  EXPECT_EQ(mul(h, g, g), one);
  EXPECT_TRUE(is_zero(mul(h, x, x)));
  EXPECT_EQ(mul(h, x, g), scaled(gx, n(-1)));
  EXPECT_EQ(mul(h, g, x), gx);
  EXPECT_TRUE(is_group_like(h, g));
  EXPECT_TRUE(is_primitive(h, x, g));
  EXPECT_FALSE(is_cocommutative(h));
  EXPECT_TRUE(check_hopf(h).passed());
}

TEST(HopfCore, GroupAlgebrasPass) {
  for (const auto& g : small_groups_up_to_8()) {
    HopfData h = group_algebra(g, Q);
    auto rep = check_hopf(h);
    EXPECT_TRUE(rep.passed()) << g.name() << ": " << rep.identity_name;
    EXPECT_TRUE(is_cocommutative(h));
  }
  EXPECT_TRUE(check_hopf(group_algebra(symmetric_group_3(), Field::prime(5))).passed());
}

TEST(HopfCore, GroundFieldAndOpposite) {
  EXPECT_TRUE(check_hopf(ground_field_hopf(Q)).passed());
  HopfData op = opposite_hopf(sweedler_h4(Q));
  EXPECT_TRUE(check_hopf(op).passed());
}

TEST(HopfCore, CorruptedMultiplicationGivesWitness) {
  HopfData h = sweedler_h4(Q);
  h.algebra.mult[2 * 4 + 2] = {{0, n(1)}};  // x^2 = 1
  auto suite = hopf_identities(h);
  auto rep = suite.run();
  ASSERT_FALSE(rep.passed());
  EXPECT_EQ(rep.identity_name, "associativity");
  ASSERT_TRUE(rep.witness.has_value());
  EXPECT_TRUE(suite.reconfirm(rep));
  // the witness is the lexicographically first failing triple
  const auto& w = rep.witness->indices;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c) {
        if (std::vector<std::size_t>{a, b, c} >= w) continue;
        Vector lhs = mul(h, mul(h, basis(h, a), basis(h, b)), basis(h, c));
        Vector rhs = mul(h, basis(h, a), mul(h, basis(h, b), basis(h, c)));
        EXPECT_EQ(lhs, rhs) << a << b << c;
      }
}

TEST(HopfCore, FullModeReportsEveryIdentity) {
  HopfData h = sweedler_h4(Q);
  h.antipode(3, 2) = n(2);
  auto first = check_hopf(h);
  auto full = check_hopf(h, SuiteMode::full);
  EXPECT_FALSE(first.passed());
  EXPECT_FALSE(full.passed());
  EXPECT_EQ(first.identity_name, full.identity_name);
  EXPECT_GT(full.checks.size(), first.checks.size());
  EXPECT_EQ(full.checks.size(), hopf_identities(sweedler_h4(Q)).identities().size());
}

TEST(HopfCore, ReconfirmRejectsPassedAndForeignReports) {
  HopfData h = sweedler_h4(Q);
  auto suite = hopf_identities(h);
  auto rep = suite.run();
  EXPECT_FALSE(suite.reconfirm(rep));
  VerificationReport fake;
  fake.identity_name = "associativity";
  fake.witness = Witness{{0, 0, 0}, "", "", ""};
  EXPECT_FALSE(suite.reconfirm(fake));  // holds at (0,0,0)
}

TEST(HopfCore, ShapeValidation) {
  HopfData h = sweedler_h4(Q);
  h.algebra.labels.pop_back();
  EXPECT_THROW(check_hopf(h), DimensionError);
  HopfData k = sweedler_h4(Q);
  k.coalgebra.delta[1].push_back({9, 0, n(1)});
  EXPECT_THROW(check_hopf(k), DimensionError);
  HopfData m = sweedler_h4(Q);
  m.coalgebra.counit[0] = Scalar::one(Field::prime(5));
  EXPECT_THROW(check_hopf(m), FieldError);
}

TEST(HopfCore, IteratedComultiplicationOfPrimitive) {
  HopfData h = sweedler_h4(Q);
  // Delta^2(x) = x 1 1 + g x 1 + g g x
  Tensor t = delta_power(h, basis(h, 2), 2);
  Tensor expect_t(Q, {4, 4, 4});
  expect_t.add({2, 0, 0}, n(1));
  expect_t.add({1, 2, 0}, n(1));
  expect_t.add({1, 1, 2}, n(1));
  EXPECT_EQ(t, expect_t);
  EXPECT_THROW(delta_power(h, basis(h, 2), 8), DimensionError);
}

TEST(HopfCore, AntipodeOrder) {
  EXPECT_EQ(antipode_order(sweedler_h4(Q)), 4u);
  EXPECT_EQ(antipode_order(group_algebra(symmetric_group_3(), Q)), 2u);
  EXPECT_EQ(antipode_order(ground_field_hopf(Q)), 1u);
}

TEST(HopfCore, PermuteBasisKeepsAxioms) {
  HopfData h = sweedler_h4(Q);
  HopfData p = permute_basis(h, {3, 1, 0, 2});
  EXPECT_TRUE(check_hopf(p).passed());
  EXPECT_FALSE(same_structure(h, p));
  EXPECT_TRUE(same_structure(h, permute_basis(p, {2, 1, 3, 0})));
}

TEST(HopfCore, Morphisms) {
  HopfData h = sweedler_h4(Q);
  auto id = LinearMap::identity(Q, 4);
  EXPECT_TRUE(is_algebra_morphism(id, h, h).passed());
  EXPECT_TRUE(is_coalgebra_morphism(id, h, h).passed());
  EXPECT_FALSE(is_coalgebra_morphism(h.antipode, h, h).passed());  // S reverses the coproduct
  LinearMap twice = id;
  twice(2, 2) = n(2);
  twice(3, 3) = n(2);
  EXPECT_TRUE(is_algebra_morphism(twice, h, h).passed());
  LinearMap bad = id;
  bad(0, 1) = n(1);
  EXPECT_FALSE(is_coalgebra_morphism(bad, h, h).passed());
}

TEST(HopfCore, CobraceCompatibilityForGroupAlgebra) {
  HopfData h = group_algebra(symmetric_group_3(), Q);
  EXPECT_TRUE(check_cobrace_compat(h.algebra, h.coalgebra, h.coalgebra, h.antipode).passed());
  // Delta'(g) = 1 (x) g gives g^-1 (x) g (x) g on the right, 1 (x) g (x) g on the left
  CoalgebraData other = h.coalgebra;
  for (std::size_t i = 0; i < h.dim(); ++i) other.delta[i] = {{symmetric_group_3().identity(), i, n(1)}};
  EXPECT_FALSE(check_cobrace_compat(h.algebra, h.coalgebra, other, h.antipode).passed());
}
