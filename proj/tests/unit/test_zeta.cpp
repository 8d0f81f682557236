#include <gtest/gtest.h>

#include "trivzero/chars/presets.hpp"
#include "trivzero/zeta/bernoulli.hpp"
#include "trivzero/zeta/padic_zeta.hpp"
#include "trivzero/zeta/shintani.hpp"

using namespace tz;

namespace {
Rat field_zeta(long D, long k, int alt = 0) {
  BaseField F(D);
  auto G = ray_class_group(F, unit_ideal());
  ShintaniEngine E(G, alt);
  Rat z = 0;
  for (long i = 0; i < G->order(); ++i) z += E.partial_zeta(i, k);
  return z;
}

}  // namespace

TEST(Bernoulli, Classical) {
  EXPECT_EQ(bernoulli(1), Rat(-1, 2));
  EXPECT_EQ(bernoulli(2), Rat(1, 6));
  EXPECT_EQ(bernoulli(12), Rat(-691, 2730));
  EXPECT_EQ(bernoulli(13), Rat(0));
}

TEST(Bernoulli, DirichletLValuesAtZero) {
  // L(0, chi_D) = 2h/w for D < 0
  BaseField Q(1);
  EXPECT_EQ(classical_L_value(kronecker_character(Q, -7), 1).rational_value(), Rat(1));
  EXPECT_EQ(classical_L_value(kronecker_character(Q, -3), 1).rational_value(), Rat(1, 3));
  EXPECT_EQ(classical_L_value(kronecker_character(Q, -35), 1).rational_value(), Rat(2));
  EXPECT_EQ(classical_L_value(kronecker_character(Q, -23), 1).rational_value(), Rat(3));
  EXPECT_EQ(classical_L_value(trivial_character(Q), 2).rational_value(), Rat(-1, 12));
  try {
    classical_L_value(trivial_character(Q), 1);  // zeta(0) fine; the pole sits at s = 1
  } catch (const Error& e) {
    ADD_FAILURE() << e.what();
  }
}

TEST(Shintani, AgreesWithSiegel) {
  for (long D : {5, 8, 12, 13, 17, 21, 24, 28, 29, 40, 60}) {
    Rat s = siegel_zeta_minus_one(D);
    EXPECT_EQ(field_zeta(D, 2), s) << D;
    EXPECT_EQ(field_zeta(D, 2, 1), s) << "alternative cone chain, D = " << D;
  }
  EXPECT_EQ(field_zeta(5, 2), Rat(1, 30));
  EXPECT_EQ(field_zeta(8, 2), Rat(1, 12));
}

TEST(Shintani, BaseChangeFactorization) {
  // L(1-k, chi o N) = L(1-k, chi) L(1-k, chi chi_5) over Q(sqrt 5)
  BaseField F(5), Q(1);
  auto phi = kronecker_character(F, -7);
  ShintaniEngine E(phi.group_ptr());
  for (long k : {1, 3}) {
    auto lhs = E.L_value(phi, k);
    auto rhs = bernoulli_L_value(kronecker_character(Q, -7), k) * bernoulli_L_value(kronecker_character(Q, -35), k);
    EXPECT_EQ(lhs.rational_value(), rhs.rational_value()) << k;
  }
  EXPECT_EQ(E.L_value(phi, 1).rational_value(), Rat(2));
}

TEST(Shintani, PoleAtOneGuard) {
  BaseField F(5);
  auto G = ray_class_group(F, unit_ideal());
  ShintaniEngine E(G);
  try {
    E.partial_zeta(0, 0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PoleAtOne);
  }
}

TEST(PadicZeta, KubotaLeopoldtCoefficients) {
  // reference digits from an independent Newton-interpolation computation
  BaseField Q(1);
  auto r = fit_padic_zeta(kronecker_character(Q, -7), 11, 4, 16);
  EXPECT_EQ(r.ledger.output(), 5);
  EXPECT_TRUE(r.series.coeff(0).is_zero());
  EXPECT_TRUE((r.series.coeff(1) - PadicNumber(11, 130806, 5)).is_zero());
  EXPECT_TRUE((r.series.coeff(2) - PadicNumber(11, 133457, 5)).is_zero());
  EXPECT_TRUE((r.series.coeff(3) - PadicNumber(11, 127891, 5)).is_zero());
  EXPECT_TRUE((r.series.coeff(4) - PadicNumber(11, 131137, 5)).is_zero());

  auto s = fit_padic_zeta(kronecker_character(Q, -3), 5, 4, 16);
  EXPECT_TRUE((s.series.coeff(0) - PadicNumber(5, 2084, 5)).is_zero());
  EXPECT_TRUE((s.series.coeff(1) - PadicNumber(5, 2230, 5)).is_zero());
  EXPECT_EQ(s.series.coeff(1).valuation(), 1);
}

TEST(PadicZeta, HeldOutWeightsValidate) {
  BaseField Q(1);
  auto r = fit_padic_zeta(kronecker_character(Q, -7), 23, 4, 16);
  ASSERT_EQ(r.residual_valuations.size(), 2u);
  for (long v : r.residual_valuations) EXPECT_GE(v, r.ledger.output());
  EXPECT_EQ(r.weights.size(), 7u);
}

TEST(PadicZeta, TooFewDigitsIsReported) {
  BaseField Q(1);
  try {
    fit_padic_zeta(kronecker_character(Q, -7), 11, 6, 4);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TruncationInsufficient) << e.what();
  }
}

TEST(PadicZeta, InterpolationWeightsOnly) {
  BaseField Q(1);
  try {
    interp_value_exact(kronecker_character(Q, -7), 11, 2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolated);
  }
}

TEST(TrivialZero, ClosedValues) {
  BaseField Q(1);
  auto one = trivial_character(Q);
  EXPECT_EQ(trivial_zero_closed_value(make_pair(one, kronecker_character(Q, -3), 5)).rational_value(), Rat(2, 3));
  EXPECT_EQ(trivial_zero_closed_value(make_pair(one, kronecker_character(Q, -7), 11)).rational_value(), Rat(0));
  auto tame = make_pair(kronecker_character(Q, 13), kronecker_character(Q, -39), 5);
  ASSERT_EQ(extra_primes(tame).size(), 1u);
  EXPECT_EQ(extra_primes(tame)[0].q, 13);
  EXPECT_EQ(trivial_zero_closed_value(tame).rational_value(), Rat(8, 13));
}

TEST(TrivialZero, ReportOnSimpleZero) {
  BaseField Q(1);
  auto rep = trivial_zero_report(make_pair(trivial_character(Q), kronecker_character(Q, -7), 11), 4, 16);
  EXPECT_TRUE(rep.value_matches);
  EXPECT_EQ(rep.apparent_order, 1);
  EXPECT_TRUE(rep.leading_is_unit);
  EXPECT_EQ(rep.irregular.size(), 1u);
}

TEST(TrivialZero, ExtraTamePrimeMatchesFit) {
  BaseField Q(1);
  auto rep = trivial_zero_report(make_pair(kronecker_character(Q, 13), kronecker_character(Q, -39), 5), 4, 16);
  EXPECT_TRUE(rep.value_matches);
  EXPECT_EQ(rep.apparent_order, 0);
}
