#pragma once
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trivzero/chars/cyclotomic.hpp"
#include "trivzero/field/ray_class.hpp"

namespace tz {

inline Ideal ideal_lcm(const BaseField& F, const Ideal& a, const Ideal& b) {
  if (F.is_rational()) return Ideal{lcm(a.a, b.a), 0, 1};
  auto fa = factor(F, a), fb = factor(F, b);
  Factorization out = fa;
  for (auto& [P, e] : fb) {
    bool found = false;
    for (auto& [Q, f] : out)
      if (Q == P) {
        f = std::max(f, e);
        found = true;
      }
    if (!found) out.emplace_back(P, e);
  }
  return from_factorization(F, out);
}

// Finite-order character of a narrow ray class group, given by its values on the
// invariant-factor generators. Ideals not coprime to the conductor map to 0.
class HeckeCharacter {
 public:
  using Value = std::optional<RootOfUnity>;  // nullopt = 0

  HeckeCharacter(std::shared_ptr<const RayClassGroup> G, std::vector<RootOfUnity> values)
      : G_(std::move(G)), values_(std::move(values)) {
    auto inv = G_->invariants();
    require(values_.size() == inv.size(), ErrorKind::InconsistentValues,
            "expected " + std::to_string(inv.size()) + " generator values");
    for (size_t i = 0; i < inv.size(); ++i)
      if (!values_[i].pow(inv[i].get_si()).is_one())
        fail(ErrorKind::InconsistentValues, "generator value order does not divide the invariant " + inv[i].get_str());
    compute_conductor();
  }

  // values given by a multiplicative function on ideals coprime to the modulus
  static HeckeCharacter from_function(std::shared_ptr<const RayClassGroup> G, const std::function<RootOfUnity(const Ideal&)>& f) {
    std::vector<RootOfUnity> vals;
    auto inv = G->invariants();
    for (size_t i = 0; i < inv.size(); ++i) {
      std::vector<Int> c(inv.size(), 0);
      c[i] = 1;
      vals.push_back(f(G->representative(G->from_coordinates(c))));
    }
    return HeckeCharacter(G, vals);
  }

  const BaseField& field() const { return G_->field(); }
  const RayClassGroup& group() const { return *G_; }
  std::shared_ptr<const RayClassGroup> group_ptr() const { return G_; }
  const Ideal& modulus() const { return G_->modulus(); }
  const Ideal& conductor() const { return conductor_; }
  bool is_primitive() const { return conductor_ == modulus(); }
  const std::vector<RootOfUnity>& values() const { return values_; }

  long order() const {
    long n = 1;
    for (auto& v : values_) n = std::lcm(n, v.n);
    return n;
  }
  bool is_trivial() const { return order() == 1; }
  bool is_quadratic() const { return order() == 2; }

  RootOfUnity value_at_index(long idx) const {
    auto c = G_->coordinates(idx);
    RootOfUnity r;
    for (size_t i = 0; i < c.size(); ++i) r = r * values_[i].pow(c[i].get_si());
    return r;
  }

  Value operator()(const Ideal& I) const {
    const BaseField& F = field();
    if (!coprime(F, I, conductor_)) return std::nullopt;
    if (G_->coprime_to_modulus(I)) return value_at_index(G_->index(I));
    return primitive()(I);
  }

  // value on the principal ideal (alpha), alpha coprime to the modulus, as a class in this group
  RootOfUnity on_element(const FieldElement& alpha) const { return value_at_index(G_->index(G_->key_of_element(alpha))); }

  const HeckeCharacter& primitive() const { return prim_ ? *prim_ : *this; }

  HeckeCharacter inverse() const {
    std::vector<RootOfUnity> v;
    for (auto& x : values_) v.push_back(x.inverse());
    return HeckeCharacter(G_, v);
  }

  std::string id() const {
    std::string s = "F" + std::to_string(field().disc()) + ";m" + modulus().to_string(field()) + ";v";
    for (auto& v : values_) s += v.to_string() + ",";
    return s;
  }

 private:
  HeckeCharacter(std::shared_ptr<const RayClassGroup> G, std::vector<RootOfUnity> values, bool)
      : G_(std::move(G)), values_(std::move(values)) {
    conductor_ = G_->modulus();
  }

  void compute_conductor() {
    const BaseField& F = field();
    conductor_ = modulus();
    for (auto& d : divisors(F, modulus())) {
      bool trivial = true;
      for (long idx : G_->kernel_to(d))
        if (!value_at_index(idx).is_one()) {
          trivial = false;
          break;
        }
      if (trivial) {
        conductor_ = d;
        break;
      }
    }
    if (conductor_ == modulus()) return;
    // values on the conductor's group, realized by ideals coprime to the full modulus
    auto Gf = ray_class_group(F, conductor_);
    std::vector<std::optional<RootOfUnity>> table(Gf->order());
    table[0] = RootOfUnity();
    long filled = 1;
    std::vector<std::pair<long, RootOfUnity>> known;
    for (long B = 20; filled < Gf->order(); B *= 2) {
      require(B < 2000000, ErrorKind::BoundTooSmall, "could not realize all conductor classes");
      for (auto& P : primes_up_to(F, B)) {
        if (!G_->coprime_to_modulus(P.ideal)) continue;
        long i = Gf->index(P.ideal);
        RootOfUnity v = value_at_index(G_->index(P.ideal));
        known.emplace_back(i, v);
        bool grew = true;
        while (grew) {
          grew = false;
          for (long k = 0; k < Gf->order(); ++k) {
            if (!table[k]) continue;
            for (auto& [j, w] : known) {
              long t = Gf->multiply_index(k, j);
              if (!table[t]) {
                table[t] = *table[k] * w;
                ++filled;
                grew = true;
              }
            }
          }
        }
        if (filled == Gf->order()) break;
      }
    }
    std::vector<RootOfUnity> vals;
    auto inv = Gf->invariants();
    for (size_t i = 0; i < inv.size(); ++i) {
      std::vector<Int> c(inv.size(), 0);
      c[i] = 1;
      vals.push_back(*table[Gf->from_coordinates(c)]);
    }
    prim_ = std::shared_ptr<const HeckeCharacter>(new HeckeCharacter(Gf, vals, true));
  }

  std::shared_ptr<const RayClassGroup> G_;
  std::vector<RootOfUnity> values_;
  Ideal conductor_;
  std::shared_ptr<const HeckeCharacter> prim_;
};

inline HeckeCharacter build_character(std::shared_ptr<const RayClassGroup> G, std::vector<RootOfUnity> values) {
  return HeckeCharacter(std::move(G), std::move(values));
}

inline HeckeCharacter trivial_character(const BaseField& F) {
  return HeckeCharacter(ray_class_group(F, unit_ideal()), {});
}

// product on the lcm of the two moduli
inline HeckeCharacter product(const HeckeCharacter& a, const HeckeCharacter& b) {
  require(a.field() == b.field(), ErrorKind::PreconditionViolated, "characters over different fields");
  const BaseField& F = a.field();
  auto G = ray_class_group(F, ideal_lcm(F, a.modulus(), b.modulus()));
  return HeckeCharacter::from_function(G, [&](const Ideal& I) { return *a(I) * *b(I); });
}

inline bool is_totally_odd(const HeckeCharacter& chi) {
  for (int i = 0; i < chi.field().degree(); ++i)
    if (chi.value_at_index(chi.group().sign_element(i)) != RootOfUnity(2, 1)) return false;
  return true;
}

inline std::vector<PrimeIdeal> irregular_primes(const HeckeCharacter& phi, long p) {
  const BaseField& F = phi.field();
  require(coprime(F, phi.conductor(), rational_ideal(F, p)), ErrorKind::PreconditionViolated,
          "p divides the conductor");
  std::vector<PrimeIdeal> out;
  for (auto& P : primes_above(F, Int(p))) {
    auto v = phi(P.ideal);
    if (v && v->is_one()) out.push_back(P);
  }
  return out;
}

// omega_p on ideals: teichmuller(N I mod p), as an exact root of unity of order dividing p-1
inline RootOfUnity teichmuller_on_ideal(const BaseField& F, const Ideal& I, long p) {
  (void)F;
  Int n = mod(I.norm(), Int(p));
  require(n != 0, ErrorKind::PreconditionViolated, "ideal not prime to p");
  long g = least_primitive_root(p);
  Int x = 1;
  for (long k = 0; k < p - 1; ++k) {
    if (x == n) return RootOfUnity(p - 1, k);
    x = mod(x * g, Int(p));
  }
  fail(ErrorKind::PreconditionViolated, "discrete log failed");
}

// phi1, phi2 with phi = phi1^{-1} phi2
struct CharacterPair {
  HeckeCharacter phi1, phi2, phi;
  long p;
  Ideal tame_level;  // prime-to-p part of cond(phi1) cond(phi2)
};

inline Ideal prime_to_p_part(const BaseField& F, const Ideal& I, long p) {
  Factorization f;
  for (auto& [P, e] : factor(F, I))
    if (P.q != p) f.emplace_back(P, e);
  return from_factorization(F, f);
}

inline CharacterPair make_pair(const HeckeCharacter& phi1, const HeckeCharacter& phi2, long p) {
  const BaseField& F = phi1.field();
  require(coprime(F, phi1.conductor(), rational_ideal(F, p)), ErrorKind::PreconditionViolated,
          "the first character must have conductor prime to p");
  HeckeCharacter phi = product(phi1.inverse(), phi2);
  HeckeCharacter prim = phi.primitive();
  require(is_totally_odd(prim), ErrorKind::PreconditionViolated, "phi1^-1 phi2 is not totally odd");
  Ideal n = prime_to_p_part(F, multiply(F, phi1.conductor(), phi2.conductor()), p);
  return CharacterPair{phi1, phi2, prim, p, n};
}

}  // namespace tz
