#include <gtest/gtest.h>

#include <numeric>

#include "trivzero/field/embed.hpp"
#include "trivzero/field/ray_class.hpp"
#include "trivzero/field/units.hpp"

using namespace tz;

TEST(BaseField, RejectsNonFundamental) {
  EXPECT_NO_THROW(BaseField(1));
  EXPECT_NO_THROW(BaseField(12));  // 12 = 4*3 is fundamental
  for (long D : {20, 9, 4, 0, -3}) {
    try {
      BaseField F(D);
      ADD_FAILURE() << D;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NonFundamentalDiscriminant) << D;
    }
  }
}

TEST(BaseField, ElementArithmetic) {
  BaseField F(5);  // w = (1 + sqrt5)/2, w^2 = w + 1
  FieldElement w(Rat(0), Rat(1));
  EXPECT_EQ(norm(F, w), Rat(-1));
  EXPECT_EQ(trace(F, w), Rat(1));
  FieldElement w2 = mul(F, w, w);
  EXPECT_EQ(w2.a, Rat(1));
  EXPECT_EQ(w2.b, Rat(1));
  FieldElement x(Rat(3), Rat(-2));
  FieldElement q = div(F, x, w);
  FieldElement back = mul(F, q, w);
  EXPECT_EQ(back.a, x.a);
  EXPECT_EQ(back.b, x.b);
}

TEST(FundamentalUnit, KnownFields) {
  // eps has norm -1 for D = 5, 8, 13; the totally positive unit is eps^2 there, and eps itself for D = 12
  for (long D : {5, 8, 12, 13}) {
    BaseField F(D);
    FieldElement e = fundamental_unit(F);
    Rat n = norm(F, e);
    EXPECT_TRUE(n == 1 || n == -1) << D;
    EXPECT_TRUE(totally_positive(F, totally_positive_unit(F))) << D;
  }
  BaseField F(12);
  EXPECT_EQ(norm(F, fundamental_unit(F)), Rat(1));
}

TEST(Ideals, FactorAndDivisors) {
  BaseField Q(1);
  auto f = factor(Q, rational_ideal(Q, 360));
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].second, 3);
  EXPECT_EQ(f[1].second, 2);
  EXPECT_EQ(f[2].second, 1);
  EXPECT_EQ(divisors(Q, rational_ideal(Q, 360)).size(), 24u);

  BaseField F(5);
  EXPECT_EQ(primes_above(F, Int(11)).size(), 2u);  // split
  EXPECT_EQ(primes_above(F, Int(3)).size(), 1u);   // inert
  EXPECT_EQ(primes_above(F, Int(3))[0].norm(), 9);
  EXPECT_EQ(primes_above(F, Int(5)).size(), 1u);   // ramified
  auto P = primes_above(F, Int(11));
  Ideal prod = multiply(F, P[0].ideal, P[1].ideal);
  EXPECT_EQ(prod, rational_ideal(F, 11));
  EXPECT_EQ(conj(F, P[0].ideal), P[1].ideal);
  EXPECT_TRUE(divides(F, P[0].ideal, rational_ideal(F, 11)));
  EXPECT_FALSE(coprime(F, P[0].ideal, rational_ideal(F, 22)));
}

TEST(Ideals, CountUpToBound) {
  // ideals of Q(sqrt5) of norm <= 50, via the Dirichlet series (1 * chi_5)(n)
  BaseField F(5);
  long expect = 0;
  for (long n = 1; n <= 50; ++n)
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) expect += kronecker(Int(5), Int(d));
  EXPECT_EQ(static_cast<long>(ideals_up_to(F, 50).size()), expect);
}

TEST(RayClassGroup, OrdersOverQ) {
  BaseField Q(1);
  // narrow ray class group of Q mod m is (Z/m)^*
  for (long m : {1, 3, 4, 7, 12, 15, 21}) {
    long phi = 0;
    for (long a = 1; a <= m; ++a) phi += std::gcd(a, m) == 1;
    EXPECT_EQ(ray_class_group(Q, rational_ideal(Q, m))->order(), phi) << m;
  }
}

TEST(RayClassGroup, RealQuadratic) {
  // Q(sqrt3): narrow class number 2 (fundamental unit has norm +1), wide class number 1
  EXPECT_EQ(ray_class_group(BaseField(12), unit_ideal())->order(), 2);
  EXPECT_EQ(ray_class_group(BaseField(5), unit_ideal())->order(), 1);
  EXPECT_EQ(ray_class_group(BaseField(8), unit_ideal())->order(), 1);
  auto G = ray_class_group(BaseField(5), rational_ideal(BaseField(5), 7));
  EXPECT_EQ(G->order(), G->expected_order());
}

TEST(RayClassGroup, PrincipalClassIsIdentity) {
  BaseField Q(1);
  auto G = ray_class_group(Q, rational_ideal(Q, 7));
  EXPECT_EQ(G->index(rational_ideal(Q, 8)), G->index(unit_ideal()));  // 8 = 1 mod 7
  EXPECT_NE(G->index(rational_ideal(Q, 2)), G->index(rational_ideal(Q, 3)));
}

TEST(Embedding, SplitAndInert) {
  BaseField F(5);
  PadicEmbedding e(F, 11, 10);
  EXPECT_TRUE(e.split());
  FieldElement w(Rat(0), Rat(1));
  PadicNumber x = e.in_qp(w);
  EXPECT_TRUE((x * x - x - PadicNumber(11, 1, 10)).is_zero());
  // the chosen prime contains w - x mod 11
  EXPECT_EQ(e.prime_ideal().norm(), 11);
  PadicEmbedding inert(F, 3, 10);
  EXPECT_FALSE(inert.split());
  QuadPadic y = inert(w);
  EXPECT_TRUE((y * y - y - QuadPadic(PadicNumber(3, 1, 10))).is_zero());
  try {
    PadicEmbedding bad(F, 5, 10);
    ADD_FAILURE();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::RamifiedPrime);
  }
}
