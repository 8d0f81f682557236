#pragma once
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "trivzero/field/snf.hpp"
#include "trivzero/field/units.hpp"

namespace tz {

// Narrow ray class group of modulus m * (all real places).
// An ideal a coprime to m is written a = alpha * b_j with b_j a fixed class representative;
// its class is determined by j and the image of alpha in ((O/m)^x x {+-1}^d) / image(units).
class RayClassGroup {
 public:
  struct Residue {
    Int x, y;
    int signs = 0;  // bit i set: negative at place i
    friend bool operator<(const Residue& a, const Residue& b) { return std::tie(a.x, a.y, a.signs) < std::tie(b.x, b.y, b.signs); }
    friend bool operator==(const Residue& a, const Residue& b) { return a.x == b.x && a.y == b.y && a.signs == b.signs; }
  };
  struct Key {
    long cls = 0;
    Residue r;
    friend bool operator<(const Key& a, const Key& b) { return std::tie(a.cls, a.r) < std::tie(b.cls, b.r); }
    friend bool operator==(const Key& a, const Key& b) { return a.cls == b.cls && a.r == b.r; }
  };

  RayClassGroup(const BaseField& F, const Ideal& m, long max_bound = 20000) : F_(F), m_(m) {
    require(!m.a.get_str().empty(), ErrorKind::PreconditionViolated, "bad modulus");
    mint_ = m.min_int();
    init_classes();
    init_units();
    build(max_bound);
  }

  const BaseField& field() const { return F_; }
  const Ideal& modulus() const { return m_; }
  long order() const { return static_cast<long>(elems_.size()); }
  // invariant factors d_1 | d_2 | ... (trivial ones dropped)
  std::vector<Int> invariants() const {
    std::vector<Int> out;
    for (size_t i : live_) out.push_back(snf_.d[i]);
    return out;
  }
  long expected_order() const { return expected_; }

  bool coprime_to_modulus(const Ideal& I) const { return coprime(F_, I, m_); }

  // class of an ideal coprime to the modulus
  Key key(const Ideal& I) const {
    require(coprime_to_modulus(I), ErrorKind::PreconditionViolated, "ideal not coprime to the modulus");
    Key k = identity_key();
    for (auto& [P, e] : tz::factor(F_, I)) {
      Key kp = prime_key(P.ideal);
      for (int i = 0; i < e; ++i) k = compose(k, kp);
    }
    return k;
  }

  // class of the principal ideal (alpha), alpha coprime to the modulus
  Key key_of_element(const FieldElement& alpha) const { return Key{0, canonical(residue_of(alpha, 1))}; }

  long index(const Key& k) const {
    auto it = index_.find(k);
    require(it != index_.end(), ErrorKind::PreconditionViolated, "class not enumerated");
    return it->second;
  }
  long index(const Ideal& I) const { return index(key(I)); }

  // coordinates in the invariant-factor basis
  std::vector<Int> coordinates(long idx) const {
    const auto& w = words_.at(idx);
    std::vector<Int> out;
    for (size_t i : live_) {
      Int s = 0;
      for (size_t g = 0; g < w.size(); ++g) s += w[g] * snf_.Q[g][i];
      out.push_back(mod(s, snf_.d[i]));
    }
    return out;
  }
  std::vector<Int> coordinates(const Ideal& I) const { return coordinates(index(I)); }

  // integral representative ideal of element idx, coprime to the modulus
  const Ideal& representative(long idx) const { return reps_.at(idx); }
  const Key& element_key(long idx) const { return elems_.at(idx); }

  // element index with the given invariant coordinates
  long from_coordinates(const std::vector<Int>& c) const {
    for (long i = 0; i < order(); ++i)
      if (coordinates(i) == c) return i;
    fail(ErrorKind::PreconditionViolated, "no element with these coordinates");
  }

  // class of (alpha) with alpha = 1 mod m, negative exactly at real place i
  long sign_element(int place) const { return index(Key{0, canonical(Residue{1, 0, 1 << place})}); }

  // classes of (alpha), alpha = 1 mod d, totally positive: kernel of the map to the ray class group mod d
  std::vector<long> kernel_to(const Ideal& d) const {
    require(divides(F_, d, m_), ErrorKind::PreconditionViolated, "not a divisor of the modulus");
    std::vector<long> out;
    for (auto& r : unit_residues_) {
      FieldElement a(Rat(r.first), Rat(r.second));
      if (!contains(F_, d, sub(a, FieldElement(1)))) continue;
      out.push_back(index(Key{0, canonical(Residue{r.first, r.second, 0})}));
    }
    return out;
  }

  long multiply_index(long i, long j) const { return index(compose(elems_.at(i), elems_.at(j))); }

  const ClassGroup& class_group() const { return cg_; }
  const std::vector<PrimeIdeal>& generators() const { return gens_; }

 private:
  Residue reduce(const Int& x0, const Int& y0, int signs) const {
    if (F_.is_rational()) return Residue{mod(x0, mint_), 0, signs};
    Int y = mod(y0, m_.c);
    Int k = (y0 - y) / m_.c;
    Int x = mod(x0 - k * m_.b, m_.a);
    return Residue{x, y, signs};
  }

  Residue residue_of(const FieldElement& alpha, const Int& extra_den) const {
    Int den = lcm(alpha.a.get_den(), alpha.b.get_den()) * extra_den;
    Int di = inv_mod(den, mint_);
    Rat xa = alpha.a * den, yb = alpha.b * den;
    Int x = xa.get_num() * di, y = yb.get_num() * di;
    int s = 0;
    for (int i = 0; i < F_.degree(); ++i)
      if (sign(F_, alpha, i) < 0) s |= 1 << i;
    return reduce(x, y, s);
  }

  Residue rmul(const Residue& a, const Residue& b) const {
    FieldElement p = mul(F_, FieldElement(Rat(a.x), Rat(a.y)), FieldElement(Rat(b.x), Rat(b.y)));
    return reduce(p.a.get_num(), p.b.get_num(), a.signs ^ b.signs);
  }

  Residue canonical(const Residue& r) const {
    Residue best = rmul(r, unit_image_.front());
    for (auto& u : unit_image_) {
      Residue c = rmul(r, u);
      if (c < best) best = c;
    }
    return best;
  }

  Key identity_key() const { return Key{0, canonical(Residue{1, 0, 0})}; }

  Key compose(const Key& a, const Key& b) const {
    auto& [c3, delta] = class_mult_.at({a.cls, b.cls});
    return Key{c3, canonical(rmul(rmul(a.r, b.r), delta))};
  }

  Key prime_key(const Ideal& P) const {
    {
      std::shared_lock lk(mu_);
      auto it = prime_keys_.find(P);
      if (it != prime_keys_.end()) return it->second;
    }
    long j = F_.is_rational() ? 0 : class_index(F_, cg_, P);
    Key k = Key{j, canonical(alpha_residue(P, j))};
    std::unique_lock lk(mu_);
    prime_keys_[P] = k;
    return k;
  }

  // residue of alpha where I = alpha * b_j
  Residue alpha_residue(const Ideal& I, long j) const {
    auto g = principal_generator(F_, multiply(F_, I, conj(F_, breps_[j])));
    require(g.has_value(), ErrorKind::PreconditionViolated, "class representative mismatch");
    return residue_of(*g, breps_[j].norm());
  }

  void init_classes() {
    cg_ = tz::class_group(F_);
    Int Nm = m_.norm();
    // representatives of norm prime to N(m)
    breps_.assign(cg_.order(), unit_ideal());
    std::vector<bool> have(cg_.order(), false);
    have[0] = true;
    long found = 1;
    for (long B = 50; found < cg_.order(); B *= 2) {
      require(B < 1000000, ErrorKind::BoundTooSmall, "no class representatives found");
      for (auto& P : primes_up_to(F_, B)) {
        if (gcd(P.norm(), Nm) != 1) continue;
        long j = class_index(F_, cg_, P.ideal);
        if (!have[j]) {
          have[j] = true;
          breps_[j] = P.ideal;
          ++found;
        }
      }
    }
    for (long i = 0; i < cg_.order(); ++i)
      for (long j = 0; j < cg_.order(); ++j) {
        Ideal prod = multiply(F_, breps_[i], breps_[j]);
        long k = F_.is_rational() ? 0 : class_index(F_, cg_, prod);
        class_mult_[{i, j}] = {k, Residue{1, 0, 0}};
      }
  }

  void init_units() {
    // (O/m)^x
    long units = 1;
    for (auto& [P, e] : tz::factor(F_, m_)) {
      Int n = P.norm();
      Int cnt = ipow(n, e - 1) * (n - 1);
      units *= cnt.get_si();
    }
    Int rows = F_.is_rational() ? mint_ : m_.a, cols = F_.is_rational() ? Int(1) : m_.c;
    for (Int y = 0; y < cols; ++y)
      for (Int x = 0; x < rows; ++x) {
        if (x == 0 && y == 0) {
          if (m_.is_unit()) unit_residues_.emplace_back(x, y);
          continue;
        }
        if (sum(F_, principal_ideal(F_, FieldElement(Rat(x), Rat(y))), m_).is_unit()) unit_residues_.emplace_back(x, y);
      }
    require(static_cast<long>(unit_residues_.size()) == units || m_.is_unit(), ErrorKind::PreconditionViolated,
            "residue count mismatch");
    std::vector<Residue> gens{residue_of(FieldElement(-1), 1)};
    if (!F_.is_rational()) gens.push_back(residue_of(fundamental_unit(F_), 1));
    unit_image_ = {Residue{1 % mint_, 0, 0}};
    if (m_.is_unit()) unit_image_ = {Residue{0, 0, 0}};
    for (size_t i = 0; i < unit_image_.size(); ++i)
      for (auto& g : gens) {
        Residue n = rmul(unit_image_[i], g);
        bool seen = false;
        for (auto& u : unit_image_)
          if (u == n) seen = true;
        if (!seen) unit_image_.push_back(n);
      }
    long A = static_cast<long>(unit_residues_.size()) << F_.degree();
    expected_ = cg_.order() * A / static_cast<long>(unit_image_.size());
    // class multiplication: b_i b_j = delta * b_k
    for (auto& [ij, val] : class_mult_) {
      if (F_.is_rational()) break;
      Ideal prod = multiply(F_, breps_[ij.first], breps_[ij.second]);
      val.second = alpha_residue(prod, val.first);
    }
  }

  void build(long max_bound) {
    Key id = identity_key();
    elems_ = {id};
    reps_ = {unit_ideal()};
    index_[id] = 0;
    words_ = {{}};
    std::vector<std::vector<Int>> relations;
    for (long B = 10;; B *= 2) {
      if (B > max_bound) fail(ErrorKind::BoundTooSmall, "ray class group enumeration did not close");
      for (auto& P : primes_up_to(F_, B)) {
        if (order() == expected_) break;
        if (!coprime_to_modulus(P.ideal)) continue;
        bool used = false;
        for (auto& g : gens_)
          if (g == P) used = true;
        if (used) continue;
        Key kp = prime_key(P.ideal);
        if (index_.count(kp)) continue;  // already reachable
        gens_.push_back(P);
        close();
      }
      if (order() == expected_) break;
    }
    if (gens_.empty()) {
      gens_.push_back(primes_up_to(F_, 50).front());
      close();
    }
    size_t r = gens_.size();
    for (auto& w : words_) w.resize(r, 0);
    for (long i = 0; i < order(); ++i)
      for (size_t g = 0; g < r; ++g) {
        long j = index(compose(elems_[i], prime_key(gens_[g].ideal)));
        std::vector<Int> rel(r, 0);
        for (size_t k = 0; k < r; ++k) rel[k] = words_[i][k] - words_[j][k];
        rel[g] += 1;
        bool zero = true;
        for (auto& v : rel)
          if (v != 0) zero = false;
        if (!zero) relations.push_back(rel);
      }
    if (relations.empty()) relations.push_back(std::vector<Int>(r, 0));
    snf_ = smith_form(relations, r);
    Int prod = 1;
    for (size_t i = 0; i < r; ++i) {
      require(snf_.d[i] != 0, ErrorKind::PreconditionViolated, "relation lattice not of full rank");
      prod *= snf_.d[i];
      if (snf_.d[i] != 1) live_.push_back(i);
    }
    require(prod == order(), ErrorKind::PreconditionViolated, "Smith form does not match the group order");
  }

  // breadth-first closure under all generators so far
  void close() {
    for (size_t i = 0; i < elems_.size(); ++i)
      for (size_t g = 0; g < gens_.size(); ++g) {
        Key k = compose(elems_[i], prime_key(gens_[g].ideal));
        if (index_.count(k)) continue;
        index_[k] = static_cast<long>(elems_.size());
        elems_.push_back(k);
        reps_.push_back(multiply(F_, reps_[i], gens_[g].ideal));
        auto w = words_[i];
        w.resize(gens_.size(), 0);
        w[g] += 1;
        words_.push_back(w);
      }
  }

  BaseField F_;
  Ideal m_;
  Int mint_;
  ClassGroup cg_;
  std::vector<Ideal> breps_;
  std::map<std::pair<long, long>, std::pair<long, Residue>> class_mult_;
  std::vector<std::pair<Int, Int>> unit_residues_;
  std::vector<Residue> unit_image_;
  long expected_ = 1;
  std::vector<Key> elems_;
  std::vector<Ideal> reps_;
  std::vector<std::vector<Int>> words_;
  std::map<Key, long> index_;
  std::vector<PrimeIdeal> gens_;
  SmithForm snf_;
  std::vector<size_t> live_;
  mutable std::shared_mutex mu_;
  mutable std::map<Ideal, Key> prime_keys_;
};

// Shared, lazily built groups keyed by (disc, modulus).
inline std::shared_ptr<const RayClassGroup> ray_class_group(const BaseField& F, const Ideal& m) {
  static std::shared_mutex mu;
  static std::map<std::tuple<long, Int, Int, Int>, std::shared_ptr<const RayClassGroup>> table;
  auto key = std::make_tuple(F.disc(), m.a, m.b, m.c);
  {
    std::shared_lock lk(mu);
    auto it = table.find(key);
    if (it != table.end()) return it->second;
  }
  auto G = std::make_shared<const RayClassGroup>(F, m);
  std::unique_lock lk(mu);
  return table.emplace(key, G).first->second;
}

}  // namespace tz
