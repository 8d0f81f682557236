#pragma once
#include <chrono>
#include <functional>

#include "trivzero/app/commands.hpp"

namespace tz {

struct SelfCheck {
  std::string name;
  std::function<bool()> run;
};

namespace selftest_detail {

template <class F>
bool throws_kind(ErrorKind k, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == k;
  }
  return false;
}

inline bool is_ideal_list(const std::vector<Ideal>& got, const std::vector<long>& norms) {
  if (got.size() != norms.size()) return false;
  for (size_t i = 0; i < got.size(); ++i)
    if (got[i].norm() != norms[i]) return false;
  return true;
}

}  // namespace selftest_detail

inline std::vector<SelfCheck> selftest_checks() {
  using namespace selftest_detail;
  BaseField Q(1);
  std::vector<SelfCheck> v;
  v.push_back({"rationals have degree 1 and trivial different", [Q] {
                 return Q.degree() == 1 && different(Q).is_unit();
               }});
  v.push_back({"non-fundamental discriminant rejected", [] {
                 return throws_kind(ErrorKind::NonFundamentalDiscriminant, [] { BaseField F(20); });
               }});
  v.push_back({"factor (12) over Q", [Q] {
                 auto f = factor(Q, rational_ideal(Q, 12));
                 return f.size() == 2 && f[0].first.q == 2 && f[0].second == 2 && f[1].first.q == 3 && f[1].second == 1;
               }});
  v.push_back({"divisors of (1) and (4)", [Q] {
                 return is_ideal_list(divisors(Q, unit_ideal()), {1}) && is_ideal_list(divisors(Q, rational_ideal(Q, 4)), {1, 2, 4});
               }});
  v.push_back({"ray class group of Q mod 7 has order 6", [Q] { return ray_class_group(Q, rational_ideal(Q, 7))->order() == 6; }});
  v.push_back({"ray class group of Q mod 1 is trivial", [Q] { return ray_class_group(Q, unit_ideal())->order() == 1; }});
  v.push_back({"7 embeds as 7 mod 5^4", [Q] {
                 PadicEmbedding e(Q, 5, 4);
                 return e.in_qp(FieldElement(7)).lift() == 7;
               }});
  v.push_back({"5 ramifies in Q(sqrt 5)", [] {
                 return throws_kind(ErrorKind::RamifiedPrime, [] { PadicEmbedding e(BaseField(5), 5, 4); });
               }});
  v.push_back({"log(1) = 0", [] { return padic_log(PadicNumber(7, 1, 10)).is_zero(); }});
  v.push_back({"teichmuller of 1 mod p is 1", [] { return teichmuller(PadicNumber(7, 8, 10)).agrees_with(PadicNumber(7, 1, 10)); }});
  v.push_back({"teichmuller(-1) = -1", [] { return teichmuller(PadicNumber(7, -1, 10)).agrees_with(PadicNumber(7, -1, 10)); }});
  v.push_back({"u = 1+p, k = 2 gives p", [] { return weight_point(11, 12, 2) == 11; }});
  v.push_back({"constant fit, loss 0", [] {
                 auto r = fit_series({Rat(0)}, {PadicNumber(5, 3, 10)});
                 return r.series.coeff(0).agrees_with(PadicNumber(5, 3, 10)) && r.ledger.total_loss() == 0;
               }});
  v.push_back({"line through origin, loss 1", [] {
                 auto r = fit_series({Rat(0), Rat(5)}, {PadicNumber(5, 0, 10), PadicNumber(5, 5, 10)});
                 return r.series.coeff(0).is_zero() && r.series.coeff(1).agrees_with(PadicNumber(5, 1, 9)) &&
                        r.ledger.total_loss() == 1;
               }});
  v.push_back({"trivial values give the trivial character", [Q] {
                 auto G = ray_class_group(Q, rational_ideal(Q, 7));
                 auto chi = build_character(G, {RootOfUnity(6, 0)});
                 return chi.is_trivial() && chi.conductor().is_unit();
               }});
  v.push_back({"chi mod 7 vanishes at (7), trivial is 1", [Q] {
                 auto chi = parse_character(Q, "mod7quad");
                 auto one = trivial_character(Q);
                 return !chi(rational_ideal(Q, 7)).has_value() && one(rational_ideal(Q, 91))->is_one();
               }});
  v.push_back({"trivial character is not totally odd", [Q] { return !is_totally_odd(trivial_character(Q)); }});
  v.push_back({"trivial character: all primes above p irregular", [] {
                 BaseField F(5);
                 return irregular_primes(trivial_character(F), 11).size() == 2;
               }});
  v.push_back({"Euler factor kills L(0) for chi mod 7 at p = 11", [Q] {
                 return interp_value_exact(parse_character(Q, "mod7quad"), 11, 1).is_zero();
               }});
  v.push_back({"no irregular prime: constant term is the k = 1 value", [Q] {
                 auto chi = parse_character(Q, "mod3quad");
                 auto z = fit_padic_zeta(chi, 5, 2, 8);
                 return z.series.coeff(0).agrees_with(interp_point(chi, 5, 1, 8));
               }});
  v.push_back({"no extra primes: imprimitive equals primitive", [Q] {
                 auto pr = make_pair(trivial_character(Q), parse_character(Q, "mod7quad"), 11);
                 auto a = imprimitive_zeta(pr, 2, 8), b = fit_padic_zeta(pr.phi, 11, 2, 8);
                 for (long i = 0; i <= 2; ++i)
                   if (!a.series.coeff(i).agrees_with(b.series.coeff(i))) return false;
                 return true;
               }});
  v.push_back({"weight-1 coefficient at a prime is phi1 + phi2", [Q] {
                 auto pr = make_pair(trivial_character(Q), parse_character(Q, "mod7quad"), 11);
                 return weight1_coeff(pr, rational_ideal(Q, 3)) == CyclotomicNumber(Rat(0), 2) &&
                        weight1_coeff(pr, rational_ideal(Q, 2)) == CyclotomicNumber(Rat(2), 2);
               }});
  v.push_back({"coefficient at (1) is 1", [Q] {
                 auto pr = make_pair(trivial_character(Q), parse_character(Q, "mod7quad"), 11);
                 return weight1_coeff(pr, unit_ideal()) == CyclotomicNumber(Rat(1), 2) &&
                        family_coeff(pr, unit_ideal(), 3, 8).coeff(0).agrees_with(PadicNumber(11, 1, 8));
               }});
  v.push_back({"stabilization leaves coefficients prime to p alone", [Q] {
                 auto pr = make_pair(trivial_character(Q), parse_character(Q, "mod7quad"), 11);
                 auto b = rational_ideal(Q, 6);
                 return p_stabilize_weight1(pr, b) == weight1_coeff(pr, b);
               }});
  v.push_back({"ramified phi has no constant term at infinity", [Q] {
                 auto pr = make_pair(parse_character(Q, "mod7quad"), trivial_character(Q), 11);
                 for (auto& [rep, s] : family_constant_term(pr, 2, 8))
                   for (long i = 0; i <= s.degree(); ++i)
                     if (!s.coeff(i).is_zero()) return false;
                 return true;
               }});
  v.push_back({"unit modulus: no vanishing conditions", [Q] {
                 auto one = trivial_character(Q);
                 CharacterPair pr{one, one, one, 11, unit_ideal()};
                 return !cusp_constant_term_vanishes(pr, CuspLabel{});
               }});
  v.push_back({"chi mod 3 at p = 5 does not split", [Q] {
                 return throws_kind(ErrorKind::NotSplit, [Q] { splitting_field(parse_character(Q, "mod3quad"), 5); });
               }});
  v.push_back({"L is homogeneous in u0 and symmetric under conjugation", [Q] {
                 auto H = splitting_field(parse_character(Q, "mod7quad"), 11);
                 auto u = find_p_unit(H);
                 auto L = l_invariant(H, u, 10).L;
                 return l_invariant(H, u.power(3), 10).L.agrees_with(L) && l_invariant(H, u.conjugate({1, -1}), 10).L.agrees_with(L);
               }});
  v.push_back({"quadratic phi: sum is 2L", [Q] {
                 auto chi = parse_character(Q, "mod7quad");
                 auto s = l_invariant_sum_check(chi, 11, 10);
                 return s.sum.agrees_with(s.L.scale(2)) && s.nonzero;
               }});
  v.push_back({"precision-starved sum check is inconclusive", [Q] {
                 return throws_kind(ErrorKind::InconclusivePrecision, [Q] { l_invariant_sum_check(parse_character(Q, "mod7quad"), 11, 1); });
               }});
  v.push_back({"rank check over Q: kernel 0", [Q] {
                 auto r = cocycle_rank_check(parse_character(Q, "mod7quad"), 11, 10);
                 return r.observed == 0 && r.expected == 0;
               }});
  v.push_back({"quadratic phi: lambda = mu = -1/(2 log u)", [Q] {
                 auto fam = build_family(parse_character(Q, "mod7quad"), 11, 10);
                 PadicNumber want = PadicNumber(11, frac(-1, 2), 10) / fam.log_u;
                 return fam.lambda.agrees_with(want) && fam.mu.agrees_with(want);
               }});
  v.push_back({"table at phi(l) = 1 and at U_p", [Q] {
                 auto fam = build_family(parse_character(Q, "mod7quad"), 11, 10);
                 auto l = rational_ideal(Q, 2);  // chi_-7(2) = 1
                 bool a = fam.table_T(l).agrees_with(fam.eta(l) / fam.log_u);
                 bool b = fam.table_U(fam.prime).agrees_with(fam.L / fam.log_u.scale(2));
                 return a && b;
               }});
  v.push_back({"eps = 0 shadow obeys the classical recursion", [] {
                 for (int s : {1, -1})
                   for (long n = 1; n <= 4; ++n)
                     if (!detail::eigen_recursion(Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), s, n)) return false;
                 return true;
               }});
  v.push_back({"no trivial zero: Gross-Stark check not applicable", [Q] {
                 return throws_kind(ErrorKind::NotApplicable, [Q] { gross_stark_check(parse_character(Q, "mod3quad"), 5, 2, 8); });
               }});
  v.push_back({"wrong sign fails the Gross-Stark check", [Q] {
                 return !gross_stark_check(parse_character(Q, "mod7quad"), 11, 4, 16, +1).pass;
               }});
  return v;
}

inline Json run_selftest() {
  Json checks = Json::array();
  long failed = 0;
  for (auto& c : selftest_checks()) {
    bool ok = false;
    std::string err;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      err = e.what();
    }
    if (!ok) ++failed;
    Json row{{"name", c.name}, {"pass", ok}};
    if (!err.empty()) row["error"] = err;
    checks.push_back(row);
  }
  return Json{{"tool", "trivzero"}, {"version", kToolVersion}, {"command", "selftest"},
              {"result", Json{{"checks", checks}, {"failed", failed}, {"passed", static_cast<long>(checks.size()) - failed}}}};
}

}  // namespace tz
