#include <gtest/gtest.h>

#include <random>

#include "trivzero/padic/dual.hpp"
#include "trivzero/padic/fit.hpp"
#include "trivzero/padic/functions.hpp"
#include "trivzero/padic/series.hpp"

using namespace tz;

TEST(PadicNumber, ValuationAndUnit) {
  PadicNumber x(5, Rat(50, 3), 10);
  EXPECT_EQ(x.valuation(), 2);
  EXPECT_EQ(x.precision(), 10);
  EXPECT_EQ(mod(x.unit() * 3, Int(5 * 5 * 5 * 5 * 5 * 5 * 5 * 5)), 2);
  EXPECT_TRUE(PadicNumber(5, 0, 10).is_zero());
  EXPECT_TRUE(PadicNumber(5, ipow(5, 12), 10).is_zero());
}

TEST(PadicNumber, CappedPrecisionPropagates) {
  PadicNumber a(7, 1, 10), b(7, Rat(1), 6);
  EXPECT_EQ((a + b).precision(), 6);
  PadicNumber p7(7, 7, 10);
  EXPECT_EQ((a * p7).precision(), 10);
  EXPECT_EQ((a / p7).valuation(), -1);
  EXPECT_EQ((a / p7).precision(), 8);  // relative precision 9
  // cancellation leaves what the inputs certify
  PadicNumber c(7, Int(1 + ipow(7, 8)), 10);
  EXPECT_EQ((c - a).valuation(), 8);
}

TEST(PadicNumber, RandomRingIdentities) {
  std::mt19937 g(11);
  std::uniform_int_distribution<long> d(-100000, 100000);
  for (int t = 0; t < 200; ++t) {
    Rat x(d(g)), y(d(g) == 0 ? 1 : d(g));
    if (y == 0) y = 1;
    if (vp(Int(y.get_num()), 3) > 0) continue;
    PadicNumber X(3, x, 20), Y(3, y, 20);
    EXPECT_TRUE((X * Y - PadicNumber(3, x * y, 20)).is_zero());
    EXPECT_TRUE((X / Y - PadicNumber(3, x / y, 20)).is_zero());
  }
}

TEST(Functions, SqrtAndTeichmuller) {
  PadicNumber s = sqrt_unit(11, Rat(-7), 12);
  EXPECT_TRUE((s * s - PadicNumber(11, -7, 12)).is_zero());
  for (long a = 1; a < 7; ++a) {
    PadicNumber w = teichmuller(PadicNumber(7, a, 12));
    EXPECT_TRUE((w.pow(6) - PadicNumber(7, 1, 12)).is_zero());
    EXPECT_TRUE((w - PadicNumber(7, a, 1)).is_zero());
  }
  PadicNumber z = root_of_unity(13, 4, 10);
  EXPECT_TRUE((z.pow(2) + PadicNumber(13, 1, 10)).is_zero());
}

TEST(Functions, LogHomomorphism) {
  long p = 11, N = 12;
  PadicNumber a(p, 12, N), b(p, 2, N), c(p, Rat(5, 3), N);
  EXPECT_TRUE((padic_log(a * b) - padic_log(a) - padic_log(b)).is_zero());
  EXPECT_TRUE((padic_log(b * c) - padic_log(b) - padic_log(c)).is_zero());
  EXPECT_TRUE(padic_log(PadicNumber(p, p, N)).is_zero());  // Iwasawa branch
  EXPECT_EQ(padic_log(a).valuation(), 1);
  // log(1+p) = p - p^2/2 + p^3/3 - ... to 3 digits
  EXPECT_TRUE((padic_log(a) - PadicNumber(p, Rat(p) - Rat(p * p, 2) + Rat(p * p * p, 3), 3)).with_precision(3).is_zero());
}

TEST(QuadPadic, FieldOperations) {
  // Q_3(sqrt 2), 2 a non-residue
  PadicNumber one(3, 1, 10), two(3, 2, 10);
  QuadPadic x(one, two), y(two, one);
  QuadPadic q = x / y;
  EXPECT_TRUE((q * y - x).is_zero());
  EXPECT_TRUE((x.norm() - (one - (two * two).scale(Rat(x.nonresidue())))).is_zero());
  EXPECT_TRUE((x * x.frobenius()).b().is_zero());
  EXPECT_TRUE((padic_log(x * y) - padic_log(x) - padic_log(y)).is_zero());
}

TEST(Series, ProductAndEvaluation) {
  long p = 5, N = 12;
  PadicSeries a({PadicNumber(p, 1, N), PadicNumber(p, 2, N), PadicNumber(p, 3, N)});
  PadicSeries b({PadicNumber(p, 4, N), PadicNumber(p, -1, N), PadicNumber(p, 0, N)});
  PadicSeries c = a * b;
  PadicNumber x(p, 5, N);
  // the product is truncated at degree 2, so agreement holds mod x^3
  EXPECT_TRUE((c.evaluate(x) - a.evaluate(x) * b.evaluate(x)).with_precision(3).is_zero());
  EXPECT_TRUE((c.coeff(1) - PadicNumber(p, 7, N)).is_zero());
}

TEST(Series, BinomialSeries) {
  // (1+X)^s at X = u - 1 equals u^s for integral s
  long p = 7, N = 12, M = 14;
  PadicSeries b = binomial_series(PadicNumber(p, 3, N), M);
  PadicNumber x(p, 7, N);
  EXPECT_TRUE((b.evaluate(x) - PadicNumber(p, 8 * 8 * 8, N)).with_precision(10).is_zero());
}

TEST(Fit, RecoversPolynomialWithLedger) {
  long p = 5, N = 20;
  std::vector<Rat> xs{Rat(0), Rat(5), Rat(30), Rat(155)};
  auto f = [](const Rat& x) -> Rat { return 2 + 3 * x - x * x + 7 * x * x * x; };
  std::vector<PadicNumber> ys;
  for (auto& x : xs) ys.emplace_back(p, f(x), N);
  FitResult r = fit_series(xs, ys);
  EXPECT_EQ(r.ledger.input, N);
  EXPECT_GT(r.ledger.total_loss(), 0);
  long out = r.ledger.output();
  EXPECT_TRUE((r.series.coeff(0) - PadicNumber(p, 2, out)).is_zero());
  EXPECT_TRUE((r.series.coeff(1) - PadicNumber(p, 3, out)).is_zero());
  EXPECT_TRUE((r.series.coeff(2) - PadicNumber(p, -1, out)).is_zero());
  EXPECT_TRUE((r.series.coeff(3) - PadicNumber(p, 7, out)).is_zero());
}

TEST(Fit, RepeatedNodesAreSingular) {
  try {
    fit_series({Rat(5), Rat(5)}, {PadicNumber(5, 1, 10), PadicNumber(5, 2, 10)});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularSystem);
  }
}

TEST(Dual, SquareZero) {
  Dual<Rat> e{Rat(0), Rat(1)}, x{Rat(3), Rat(2)};
  EXPECT_EQ((e * e).a, Rat(0));
  EXPECT_EQ((e * e).b, Rat(0));
  auto y = x * x;
  EXPECT_EQ(y.a, Rat(9));
  EXPECT_EQ(y.b, Rat(12));
}
