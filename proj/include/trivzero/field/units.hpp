#pragma once
#include <optional>
#include <vector>

#include "trivzero/field/ideal.hpp"

namespace tz {

// Fundamental unit eps > 1 (first embedding) of a real quadratic field.
inline FieldElement fundamental_unit(const BaseField& F, long ybound = 100000000) {
  require(!F.is_rational(), ErrorKind::PreconditionViolated, "Q has no fundamental unit");
  long D = F.disc();
  for (long y = 1; y <= ybound; ++y) {
    if (D % 4 == 1) {
      // x^2 - D y^2 = +-4, eps = (x + y sqrt D)/2 = (x - y)/2 + y w
      for (int s : {-4, 4}) {
        Int x2 = Int(D) * y * y + s;
        if (is_square(x2)) {
          Int x = isqrt(x2);
          return FieldElement(frac(x - y, 2), Rat(y));
        }
      }
    } else {
      long m = D / 4;
      for (int s : {-1, 1}) {
        Int x2 = Int(m) * y * y + s;
        if (is_square(x2)) return FieldElement(Rat(isqrt(x2)), Rat(y));
      }
    }
  }
  fail(ErrorKind::SearchExhausted, "fundamental unit not found");
}

// generator of the totally positive units
inline FieldElement totally_positive_unit(const BaseField& F) {
  FieldElement e = fundamental_unit(F);
  return norm(F, e) == 1 ? e : mul(F, e, e);
}

// generator of I if principal; the returned generator has |s1| in [sqrt N, sqrt N * eps)
inline std::optional<FieldElement> principal_generator(const BaseField& F, const Ideal& I) {
  if (F.is_rational()) return FieldElement(Rat(I.a));
  FieldElement eps = fundamental_unit(F);
  long double e = embed_real(F, eps, 0);
  long double N = I.norm().get_d();
  long double R1 = std::sqrt(N) * e * (1 + 1e-9L) + 1e-9L, R2 = std::sqrt(N) * (1 + 1e-9L) + 1e-9L;
  long double w1 = F.omega(0), w2 = F.omega(1);
  long double a = I.a.get_d(), b = I.b.get_d(), c = I.c.get_d();
  long ymax = static_cast<long>((R1 + R2) / (c * std::sqrt((long double)F.disc()))) + 1;
  for (long y = -ymax; y <= ymax; ++y) {
    // s1 = x a + y (b + c w1)
    long double base1 = y * (b + c * w1);
    long xlo = static_cast<long>(std::floor((-R1 - base1) / a)) - 1, xhi = static_cast<long>(std::ceil((R1 - base1) / a)) + 1;
    for (long x = xlo; x <= xhi; ++x) {
      long double s2 = x * a + y * (b + c * w2);
      if (std::fabs(s2) > R2 + 1) continue;
      FieldElement g(Rat(Int(x) * I.a + Int(y) * I.b), Rat(Int(y) * I.c));
      Rat n = norm(F, g);
      if (n == I.norm() || n == -I.norm()) return g;
    }
  }
  return std::nullopt;
}

inline bool is_principal(const BaseField& F, const Ideal& I) { return principal_generator(F, I).has_value(); }

// Wide class group: representatives and a class index for any ideal.
struct ClassGroup {
  std::vector<Ideal> reps;  // reps[0] = O
  long order() const { return static_cast<long>(reps.size()); }
};

inline bool equivalent(const BaseField& F, const Ideal& I, const Ideal& J) {
  return is_principal(F, multiply(F, I, conj(F, J)));
}

inline ClassGroup class_group(const BaseField& F) {
  ClassGroup G{{unit_ideal()}};
  if (F.is_rational()) return G;
  long mink = static_cast<long>(std::sqrt((double)F.disc()) / 2) + 1;
  auto primes = primes_up_to(F, mink);
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < G.reps.size(); ++i)
      for (auto& P : primes) {
        Ideal J = multiply(F, G.reps[i], P.ideal);
        bool found = false;
        for (auto& R : G.reps)
          if (equivalent(F, J, R)) {
            found = true;
            break;
          }
        if (!found) {
          G.reps.push_back(J);
          grew = true;
        }
      }
  }
  return G;
}

inline long class_index(const BaseField& F, const ClassGroup& G, const Ideal& I) {
  for (size_t j = 0; j < G.reps.size(); ++j)
    if (equivalent(F, I, G.reps[j])) return static_cast<long>(j);
  fail(ErrorKind::PreconditionViolated, "ideal class not found");
}

}  // namespace tz
