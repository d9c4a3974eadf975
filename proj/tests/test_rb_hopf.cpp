#include "hopfrb/bridge.hpp"
#include "hopfrb/rb_hopf.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hopfrb;

namespace {

const Field Q = Field::rationals();

Scalar n(long long v) { return Scalar::from_int(Q, v); }

RelRBHopf s3_factorization() {
  GroupTable s3 = symmetric_group_3();
  // generated({1}) = <(123)>, generated({2}) = <(12)> in this element order
  return exact_factorization_rrb(s3, s3.generated({1}), s3.generated({2}), Q);
}

std::size_t basis_index(const Vector& v) {
  std::size_t idx = v.size();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) {
      EXPECT_TRUE(v[i].is_one());
      EXPECT_EQ(idx, v.size());
      idx = i;
    }
  return idx;
}

}  // namespace

TEST(Action, AdjointOnSweedler) {
  HopfData h = sweedler_h4(Q);
  ActionData ad = adjoint_action(h);
  EXPECT_TRUE(check_action(ad, h, h).passed());
  EXPECT_EQ(ad.apply(Q, basis(h, 1), basis(h, 2)), scaled(basis(h, 2), n(-1)));  // g x g^-1 = -x
  EXPECT_TRUE(is_zero(ad.apply(Q, basis(h, 2), h.algebra.unit)));              // epsilon(x) = 0
  EXPECT_TRUE(check_action(coadjoint_action(h), opposite_hopf(h), h).passed());
}

TEST(Action, BrokenActionIsReported) {
  HopfData h = group_algebra(cyclic_group(3), Q);
  ActionData a = adjoint_action(h);  // trivial, k[Z3] is commutative
  a.phi[1 * 3 + 0] = {{1, n(1)}};    // Phi_g(1) = g
  auto rep = check_action(a, h, h);
  EXPECT_FALSE(rep.passed());
  ActionData wrong{2, 3, std::vector<SparseVec>(6)};
  EXPECT_THROW(check_action(wrong, h, h), DimensionError);
}

TEST(Rrbo, ExactFactorizationOfS3) {
  RelRBHopf d = s3_factorization();
  auto rep = check_rrbo(d, {SuiteMode::full});
  EXPECT_TRUE(rep.passed()) << rep.identity_name;
  for (auto name : {"condition 3", "condition 3 (equivalent form)", "condition 3 forms agree", "condition 4", "B(1) = 1"})
    EXPECT_TRUE(rep.check_passed(name)) << name;
  HopfData derived = derived_hopf(d);
  EXPECT_TRUE(check_hopf(derived).passed());
  EXPECT_TRUE(check_hopf_brace(d).passed());
}

TEST(Rrbo, CircleOnGroupElements) {
  GroupTable s3 = symmetric_group_3();
  RelRBHopf d = s3_factorization();
  auto a = s3.generated({1}), l = s3.generated({2});
  for (Elem g = 0; g < 6; ++g)
    for (Elem h = 0; h < 6; ++h) {
      // g = x l_j: g o h = g l_j^-1 h l_j
      Elem lj = 0;
      for (Elem x : a)
        for (Elem y : l)
          if (s3.mul(x, y) == g) lj = y;
      Elem want = s3.mul(s3.mul(s3.mul(g, s3.inv(lj)), h), lj);
      EXPECT_EQ(basis_index(circle(d, basis(d.H, g), basis(d.H, h))), want);
    }
}

TEST(Rrbo, FactorizationErrors) {
  GroupTable s3 = symmetric_group_3();
  auto rot = s3.generated({1});
  EXPECT_THROW(exact_factorization_rrb(s3, rot, rot, Q), GroupError);
  EXPECT_THROW(exact_factorization_rrb(s3, {0, 2, 3}, rot, Q), GroupError);
}

TEST(Rrbo, CorruptedOperatorFails) {
  RelRBHopf d = s3_factorization();
  d.B(0, 3) = d.B(0, 3) * n(2) + n(1);
  auto rep = check_rrbo(d);
  EXPECT_FALSE(rep.passed());
  EXPECT_EQ(rep.identity_name.rfind("condition 1", 0), 0u) << rep.identity_name;
  EXPECT_THROW(derived_hopf(d), PreconditionError);
}

TEST(Rrbo, ConditionThreeFormsAgreeOnPerturbations) {
  // permutation matrices keep condition 1, so condition 3 is what decides
  RelRBHopf base = s3_factorization();
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, 1);
  int failures = 0;
  for (int t = 0; t < 30; ++t) {
    RelRBHopf d = base;
    for (std::size_t c = 0; c < 6; ++c) {
      int r = pick(rng);
      d.B(0, c) = n(r == 0);
      d.B(1, c) = n(r == 1);
    }
    auto rep = check_rrbo(d, {SuiteMode::full});
    EXPECT_TRUE(rep.check_passed("condition 3 forms agree"));
    failures += !rep.passed();
  }
  EXPECT_GT(failures, 0);
}

TEST(Rrbo, TrivialOperators) {
  HopfData h4 = sweedler_h4(Q), k = ground_field_hopf(Q), s3 = group_algebra(symmetric_group_3(), Q);
  EXPECT_TRUE(check_rrbo(trivial_rrb(h4, k)).passed());
  EXPECT_TRUE(check_rrbo(trivial_rrb(s3, h4)).passed());
  EXPECT_TRUE(check_rrbo(trivial_rrb(h4, h4)).passed());
}

TEST(Rrbo, ShapeErrors) {
  RelRBHopf d = s3_factorization();
  d.B = LinearMap(Q, 3, 6);
  EXPECT_THROW(check_rrbo(d), DimensionError);
  RelRBHopf e = s3_factorization();
  e.phi.dim_g = 6;
  EXPECT_THROW(check_rrbo(e), DimensionError);
}

TEST(Grbo, LinearizedGroupOperators) {
  for (const GroupTable& g : {symmetric_group_3(), cyclic_group(4)}) {
    for (const auto& b : enumerate_rb(g, 1)) {
      auto lin = linearize_rb(g, b, Q);
      auto rep = grbo_check(lin.H, lin.B);
      EXPECT_TRUE(rep.passed()) << g.name() << ": " << rep.identity_name;
      RelRBHopf d = grbo_data(lin.H, lin.B);
      for (Elem x = 0; x < g.order(); ++x)
        for (Elem y = 0; y < g.order(); ++y) {
          Elem want = g.mul(g.mul(g.mul(x, b(x)), y), g.inv(b(x)));
          EXPECT_EQ(basis_index(circle(d, basis(d.H, x), basis(d.H, y))), want);
        }
    }
  }
}

TEST(Grbo, NonOperatorFails) {
  GroupTable s3 = symmetric_group_3();
  auto lin = linearize_rb(s3, identity_map(6), Q);
  EXPECT_FALSE(grbo_check(lin.H, lin.B).passed());
}

TEST(Grbo, SweedlerCounitOperator) {
  HopfData h = sweedler_h4(Q);
  LinearMap b = LinearMap::from_columns(Q, 4, {basis(h, 0), basis(h, 0), zero_vector(Q, 4), zero_vector(Q, 4)});
  auto rep = grbo_check(h, b);
  EXPECT_TRUE(rep.passed()) << rep.identity_name;
  ASSERT_EQ(rep.notes.size(), 1u);
  EXPECT_NE(rep.notes[0].find("not cocommutative"), std::string::npos);
}

TEST(Hrbo, SweedlerIdentity) {
  HopfData h = sweedler_h4(Q);
  auto rep = hrbo_check(h, LinearMap::identity(Q, 4));
  EXPECT_TRUE(rep.rrbo.passed()) << rep.rrbo.identity_name;
  EXPECT_TRUE(rep.display.passed());
  EXPECT_TRUE(rep.passed());
  RelRBHopf d{h, opposite_hopf(h), coadjoint_action(h), LinearMap::identity(Q, 4)};
  EXPECT_TRUE(check_hopf(derived_hopf(d)).passed());
  EXPECT_TRUE(check_hopf_brace(d).passed());
}
