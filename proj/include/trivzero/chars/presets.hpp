#pragma once
#include <sstream>
#include <string>

#include "trivzero/chars/hecke_character.hpp"

namespace tz {

// chi_delta o N for a fundamental discriminant delta, on modulus |delta|
inline HeckeCharacter kronecker_character(const BaseField& F, long delta) {
  require(delta != 1 && is_fundamental_discriminant(delta), ErrorKind::PreconditionViolated,
          std::to_string(delta) + " is not a fundamental discriminant");
  long m = delta < 0 ? -delta : delta;
  auto G = ray_class_group(F, rational_ideal(F, m));
  return HeckeCharacter::from_function(G, [&](const Ideal& I) { return RootOfUnity::sign(kronecker(Int(delta), I.norm())); });
}

// Parses a character description:
//   trivial | kron:<delta> | mod<N>quad | gen:<a>,<b>,<c>:<e1>/<n1>,<e2>/<n2>,...
// (gen uses the HNF of the modulus, c = 1 and b = 0 over Q; values on invariant generators).
inline HeckeCharacter parse_character(const BaseField& F, const std::string& spec) {
  if (spec == "trivial" || spec == "1") return trivial_character(F);
  if (spec.rfind("kron:", 0) == 0) return kronecker_character(F, std::stol(spec.substr(5)));
  if (spec.rfind("mod", 0) == 0 && spec.size() > 7 && spec.substr(spec.size() - 4) == "quad") {
    // the quadratic Dirichlet character of conductor N, composed with the norm
    long N = std::stol(spec.substr(3, spec.size() - 7));
    bool pos = N > 1 && is_fundamental_discriminant(N), neg = N > 1 && is_fundamental_discriminant(-N);
    require(pos || neg, ErrorKind::Usage, "no quadratic character of conductor " + std::to_string(N));
    require(!(pos && neg), ErrorKind::Usage, "conductor " + std::to_string(N) + " is ambiguous; use kron:<delta>");
    return kronecker_character(F, pos ? N : -N);
  }
  if (spec.rfind("gen:", 0) == 0) {
    auto rest = spec.substr(4);
    auto colon = rest.find(':');
    std::string mod = rest.substr(0, colon), vals = colon == std::string::npos ? "" : rest.substr(colon + 1);
    std::vector<Int> abc;
    std::stringstream ms(mod);
    std::string tok;
    while (std::getline(ms, tok, ',')) abc.emplace_back(tok);
    Ideal m = F.is_rational() ? Ideal{abc.at(0), 0, 1}
                              : hnf({{abc.at(0), 0}, {abc.size() > 1 ? abc[1] : Int(0), abc.size() > 2 ? abc[2] : Int(1)}});
    std::vector<RootOfUnity> v;
    std::stringstream vs(vals);
    while (std::getline(vs, tok, ',')) {
      auto slash = tok.find('/');
      require(slash != std::string::npos, ErrorKind::Usage, "generator value must be e/n");
      v.emplace_back(std::stol(tok.substr(slash + 1)), std::stol(tok.substr(0, slash)));
    }
    return build_character(ray_class_group(F, m), v);
  }
  fail(ErrorKind::Usage, "unknown character description: " + spec);
}

}  // namespace tz
