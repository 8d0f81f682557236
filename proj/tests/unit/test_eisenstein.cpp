#include <gtest/gtest.h>

#include "trivzero/chars/presets.hpp"
#include "trivzero/eis/eisenstein.hpp"

using namespace tz;

namespace {
CharacterPair q_pair(long p) {
  BaseField Q(1);
  return make_pair(trivial_character(Q), kronecker_character(Q, -7), p);
}
}  // namespace

TEST(Weight1, DivisorSumsOverQ) {
  BaseField Q(1);
  auto pr = q_pair(11);
  for (long n = 1; n <= 120; ++n) {
    long want = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) want += kronecker(Int(-7), Int(d));
    EXPECT_EQ(weight1_coeff(pr, rational_ideal(Q, n)).rational_value(), Rat(want)) << n;
  }
}

TEST(Weight1, StabilizationDropsDivisorsThroughP) {
  BaseField Q(1);
  auto pr = q_pair(11);
  // a(11) = 1 + chi(11) = 2, stabilized keeps only d = 1
  EXPECT_EQ(weight1_coeff(pr, rational_ideal(Q, 11)).rational_value(), Rat(2));
  EXPECT_EQ(p_stabilize_weight1(pr, rational_ideal(Q, 11)).rational_value(), Rat(1));
  EXPECT_EQ(p_stabilize_weight1(pr, rational_ideal(Q, 121)).rational_value(), Rat(1));
  EXPECT_EQ(p_stabilize_weight1(pr, rational_ideal(Q, 22)).rational_value(), Rat(2));
}

TEST(Family, SpecializesToWeightOne) {
  BaseField F(5);
  auto pr = make_pair(trivial_character(F), kronecker_character(F, -7), 11);
  for (auto& [b, f] : ideals_up_to(F, 150)) {
    auto s = family_coeff(pr, b, 3, 10);
    EXPECT_TRUE((s.coeff(0) - p_stabilize_weight1(pr, b).embed(11, 10)).is_zero()) << b.to_string(F);
  }
}

TEST(Family, SpecializesToHigherWeight) {
  BaseField Q(1);
  auto pr = q_pair(11);
  for (long n : {6, 8, 30}) {
    auto b = rational_ideal(Q, n);
    auto w = weight_k_coeff(pr, b, 11, 10);
    auto f = family_coeff(pr, b, 8, 20);
    PadicNumber at = f.evaluate(PadicNumber(11, weight_point(11, 12, 11), 30));
    EXPECT_TRUE((w.padic - at).with_precision(8).is_zero()) << n;
  }
}

TEST(Family, Multiplicative) {
  BaseField Q(1);
  auto pr = q_pair(11);
  for (auto [a, b] : std::vector<std::pair<long, long>>{{2, 3}, {4, 9}, {5, 8}, {11, 2}, {13, 27}}) {
    auto fa = family_coeff(pr, rational_ideal(Q, a), 3, 10), fb = family_coeff(pr, rational_ideal(Q, b), 3, 10);
    auto fab = family_coeff(pr, rational_ideal(Q, a * b), 3, 10);
    auto prod = fa * fb;
    for (long i = 0; i <= 3; ++i) EXPECT_TRUE((prod.coeff(i) - fab.coeff(i)).is_zero()) << a << "*" << b << " X^" << i;
  }
}

TEST(ConstantTerm, TrivialZeroAtInfinity) {
  auto pr = q_pair(11);
  auto ct = family_constant_term(pr, 4, 16);
  ASSERT_EQ(ct.size(), 1u);
  EXPECT_TRUE(ct[0].second.coeff(0).is_zero());
  EXPECT_EQ(ct[0].second.coeff(1).valuation(), 0);
}

TEST(ConstantTerm, PPrimeStabilized) {
  BaseField Q(1);
  auto v = pprime_stabilized_constant_term(kronecker_character(Q, -7), 11);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].second.rational_value(), Rat(1, 2));
  try {
    pprime_stabilized_constant_term(kronecker_character(Q, -3), 5);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolated);
  }
}

TEST(Cusps, VanishingConditions) {
  BaseField Q(1);
  auto pr = q_pair(11);
  Ideal seven = rational_ideal(Q, 7);
  EXPECT_TRUE(cusp_constant_term_vanishes(pr, CuspLabel{{{seven, 0}}}));
  EXPECT_FALSE(cusp_constant_term_vanishes(pr, CuspLabel{{{seven, 1}}}));
  auto swapped = make_pair(kronecker_character(Q, -7), trivial_character(Q), 11);
  EXPECT_FALSE(cusp_constant_term_vanishes(swapped, CuspLabel{{{seven, 0}}}));
  EXPECT_TRUE(cusp_constant_term_vanishes(swapped, CuspLabel{{{seven, 1}}}));
  try {
    cusp_constant_term_vanishes(pr, CuspLabel{});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IncompleteCuspData);
  }
}
