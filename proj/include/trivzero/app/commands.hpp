#pragma once
#include <cstdlib>
#include <string>

#include "trivzero/chars/presets.hpp"
#include "trivzero/deform/deformation.hpp"
#include "trivzero/io/cache.hpp"
#include "trivzero/io/json.hpp"

namespace tz {

struct RunConfig {
  long disc = 1;
  std::string chi = "mod7quad";
  std::string chi1 = "trivial";
  std::string chi2;  // empty: same as chi
  long p = 11;
  std::string u;     // empty: 1 + p
  long N = 16;
  long M = 4;
  long bound = 50;   // norm bound for sweeps
  long weight = 0;   // eis coeffs: 0 = family output
  long modulus = 1;  // chars list
  long search_bound = 1000000;
  long exponent_scale = 1;
  long power = 1;
  int iota = 0;      // split-prime choice for iota_p
  std::string cache_dir;
  bool no_cache = false;
  bool pretty = false;

  Int u_value() const { return u.empty() ? Int(1 + p) : Int(u); }
  std::string chi2_spec() const { return chi2.empty() ? chi : chi2; }

  void validate() const {
    require(p > 2 && is_prime(p), ErrorKind::Usage, "p must be an odd prime");
    require(N >= 1 && N <= 4000, ErrorKind::Usage, "N out of range");
    require(M >= 0 && M <= 60, ErrorKind::Usage, "M out of range");
    require(bound >= 1 && bound <= 100000, ErrorKind::Usage, "bound out of range");
    require(weight >= 0, ErrorKind::Usage, "weight must be >= 0");
    require(modulus >= 1, ErrorKind::Usage, "modulus must be >= 1");
    require(iota == 0 || iota == 1, ErrorKind::Usage, "iota must be 0 or 1");
    require(power != 0, ErrorKind::Usage, "power must be nonzero");
    require(exponent_scale >= 1, ErrorKind::Usage, "exponent-scale must be >= 1");
    if (!u.empty()) {
      Int uv(u);
      require(uv > 1 && vp(Int(uv - 1), p) == 1, ErrorKind::Usage, "u must be 1 + (unit) p");
    }
  }

  // everything that can change a result; cache and rendering options are excluded
  Json to_json() const {
    return Json{{"disc", disc},   {"chi", chi},         {"chi1", chi1},
                {"chi2", chi2_spec()}, {"p", p},        {"u", u_value().get_str()},
                {"N", N},         {"M", M},             {"bound", bound},
                {"weight", weight}, {"modulus", modulus}, {"search_bound", search_bound},
                {"exponent_scale", exponent_scale}, {"power", power}, {"iota", iota}};
  }
};

inline std::string default_cache_dir() {
  if (const char* e = std::getenv("TRIVZERO_CACHE_DIR"); e && *e) return e;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::string(x) + "/trivzero";
  if (const char* h = std::getenv("HOME"); h && *h) return std::string(h) + "/.cache/trivzero";
  return ".trivzero-cache";
}

inline long default_precision() {
  if (const char* e = std::getenv("TRIVZERO_PRECISION"); e && *e) return std::stol(e);
  return 16;
}

namespace cmd {

inline Json ideal_json(const BaseField& F, const Ideal& I) { return to_json(F, I); }

inline std::string element_string(const BaseField& F, const FieldElement& x) {
  if (F.is_rational()) return x.a.get_str();
  return x.a.get_str() + (x.b < 0 ? "" : "+") + x.b.get_str() + "*w";
}

inline CharacterPair pair_of(const BaseField& F, const RunConfig& c) {
  return make_pair(parse_character(F, c.chi1), parse_character(F, c.chi2_spec()), c.p);
}

inline Json field_info(const RunConfig& c) {
  BaseField F(c.disc);
  Json j{{"disc", F.disc()}, {"degree", F.degree()}};
  if (!F.is_rational()) {
    j["omega_min_poly"] = "x^2 - " + std::to_string(F.t()) + "*x - " + std::to_string(F.n());
    FieldElement eps = fundamental_unit(F);
    j["fundamental_unit"] = element_string(F, eps);
    j["unit_norm"] = to_json(norm(F, eps));
    j["totally_positive_unit"] = element_string(F, totally_positive_unit(F));
    j["different"] = ideal_json(F, different(F));
  } else {
    j["different"] = ideal_json(F, unit_ideal());
  }
  ClassGroup G = class_group(F);
  j["class_number"] = G.order();
  Json reps = Json::array();
  for (auto& r : G.reps) reps.push_back(ideal_json(F, r));
  j["class_group_reps"] = reps;
  j["narrow_class_number"] = ray_class_group(F, unit_ideal())->order();
  Json primes = Json::array();
  for (auto& P : primes_up_to(F, c.bound))
    primes.push_back(Json{{"q", to_json(P.q)}, {"ideal", ideal_json(F, P.ideal)}, {"f", P.f}, {"e", P.e}});
  j["primes"] = primes;
  return j;
}

inline Json chars_list(const RunConfig& c) {
  BaseField F(c.disc);
  auto G = ray_class_group(F, rational_ideal(F, c.modulus));
  auto inv = G->invariants();
  Json inv_j = Json::array();
  long total = 1;
  for (auto& d : inv) {
    inv_j.push_back(to_json(d));
    total *= d.get_si();
  }
  require(total <= 512, ErrorKind::PreconditionViolated, "too many characters to list (" + std::to_string(total) + ")");
  Json list = Json::array();
  for (long idx = 0; idx < total; ++idx) {
    std::vector<RootOfUnity> vals;
    long r = idx;
    for (auto& d : inv) {
      long n = d.get_si();
      vals.emplace_back(n, r % n);
      r /= n;
    }
    list.push_back(to_json(build_character(G, vals)));
  }
  return Json{{"modulus", ideal_json(F, G->modulus())}, {"order", G->order()}, {"invariants", inv_j}, {"characters", list}};
}

inline Json chars_show(const RunConfig& c) {
  BaseField F(c.disc);
  HeckeCharacter chi = parse_character(F, c.chi);
  Json j = to_json(chi);
  Json vals = Json::array();
  for (auto& P : primes_up_to(F, c.bound)) {
    auto v = chi(P.ideal);
    vals.push_back(Json{{"ideal", ideal_json(F, P.ideal)}, {"value", v ? v->to_string() : std::string("0")}});
  }
  j["values_at_primes"] = vals;
  return j;
}

inline Json eis_coeffs(const RunConfig& c) {
  BaseField F(c.disc);
  CharacterPair pr = pair_of(F, c);
  auto ideals = ideals_up_to(F, c.bound);
  auto rows = parallel_map<Json>(ideals.size(), [&](size_t i) {
    const Ideal& b = ideals[i].first;
    Json r{{"ideal", ideal_json(F, b)}};
    if (c.weight == 0) {
      r["series"] = to_json(family_coeff(pr, b, c.M, c.N, c.u_value()));
    } else {
      WeightKCoeff w = weight_k_coeff(pr, b, c.weight, c.N, c.u_value());
      if (w.exact) r["exact"] = to_json(*w.exact);
      r["padic"] = to_json(w.padic);
    }
    return r;
  });
  Json arr = Json::array();
  for (auto& r : rows) arr.push_back(r);
  return Json{{"phi", to_json(pr.phi)}, {"tame_level", ideal_json(F, pr.tame_level)}, {"coefficients", arr}};
}

inline Json eis_constant(const RunConfig& c) {
  BaseField F(c.disc);
  CharacterPair pr = pair_of(F, c);
  Json fam = Json::array();
  for (auto& [rep, s] : family_constant_term(pr, c.M, c.N, c.u_value()))
    fam.push_back(Json{{"class", ideal_json(F, rep)}, {"series", to_json(s)}});
  Json j{{"family_constant_term", fam}};
  try {
    Json st = Json::array();
    for (auto& [rep, v] : pprime_stabilized_constant_term(pr.phi, c.p))
      st.push_back(Json{{"class", ideal_json(F, rep)}, {"value", to_json(v)}});
    j["pprime_stabilized_weight1"] = st;
  } catch (const Error& e) {
    j["pprime_stabilized_weight1"] = Json{{"not_applicable", e.what()}};
  }
  return j;
}

inline Json zeta_json(const PadicZetaResult& z) {
  Json w = Json::array();
  for (long k : z.weights) w.push_back(k);
  Json res = Json::array();
  for (long v : z.residual_valuations) res.push_back(v);
  return Json{{"series", to_json(z.series)}, {"ledger", to_json(z.ledger)}, {"weights", w},
              {"held_out", z.held_out}, {"u", to_json(z.u)}, {"residual_valuations", res}};
}

inline Json zeta_fit(const RunConfig& c) {
  BaseField F(c.disc);
  HeckeCharacter phi = parse_character(F, c.chi);
  Json j = zeta_json(fit_padic_zeta(phi, c.p, c.M, c.N, c.u_value()));
  j["iota_p"] = Json{{"choice", c.iota}, {"roots_of_unity", "Teichmuller lifts of the least primitive root"}};
  j["phi"] = to_json(phi.primitive());
  return j;
}

inline Json zeta_check_zero(const RunConfig& c) {
  BaseField F(c.disc);
  CharacterPair pr = pair_of(F, c);
  TrivialZeroReport r = trivial_zero_report(pr, c.M, c.N, c.u_value());
  Json irr = Json::array();
  for (auto& P : r.irregular) irr.push_back(ideal_json(F, P.ideal));
  return Json{{"phi", to_json(pr.phi)},
              {"zeta", zeta_json(r.zeta)},
              {"closed_value", to_json(r.closed_value)},
              {"closed_value_padic", to_json(r.closed_value_padic)},
              {"value_matches", r.value_matches},
              {"irregular_primes", irr},
              {"apparent_order", r.apparent_order},
              {"leading_is_unit", r.leading_is_unit},
              {"order_statement", r.order_statement}};
}

inline Json splitting_json(const SplittingFieldData& H) {
  Json subs = Json::array();
  for (auto& s : H.subfields)
    subs.push_back(Json{{"name", s.name}, {"radicand", s.radicand}, {"disc", s.disc},
                        {"class_number", s.class_number}, {"p_splits", s.p_splits}});
  Json act = Json::array();
  for (size_t g = 0; g < H.galois.size(); ++g) {
    Json perm = Json::array();
    for (int w : H.action[g]) perm.push_back(w);
    act.push_back(Json{{"sigma", Json::array({H.galois[g].d, H.galois[g].e})}, {"places", perm}});
  }
  Json j{{"delta", H.delta}, {"H", H.F.is_rational() ? "Q(sqrt(" + std::to_string(H.delta) + "))"
                                                    : "Q(sqrt(" + std::to_string(H.rF) + "), sqrt(" + std::to_string(H.delta) + "))"},
         {"prime", ideal_json(H.F, H.prime)}, {"p_split_in_F", H.p_split_in_F}, {"d", H.d}, {"d_p", H.d_p},
         {"places_above_p", H.places}, {"subfields", subs}, {"galois_action", act}};
  j["class_number"] = H.class_number ? Json(*H.class_number) : Json(nullptr);
  return j;
}

inline Json punit_json(const SplittingFieldData& H, const PUnit& u) {
  Json f = Json::array();
  for (size_t i = 0; i < u.gens.size(); ++i) {
    Json mp = Json::array();
    for (auto& c : min_poly(H, u.gens[i])) mp.push_back(to_json(c));
    f.push_back(Json{{"element", to_string(H, u.gens[i])}, {"min_poly", mp}, {"exponent", u.exps[i]}});
  }
  return f;
}

inline Json linv_compute(const RunConfig& c) {
  BaseField F(c.disc);
  HeckeCharacter phi = parse_character(F, c.chi).primitive();
  SplittingFieldData H = splitting_field(phi, c.p, c.iota);
  PUnit u = find_p_unit(H, {c.search_bound, c.exponent_scale}).power(c.power);
  LInvariantReport r = l_invariant(H, u, c.N);
  Json f = Json::array();
  for (auto& x : r.f) f.push_back(to_json(x));
  return Json{{"splitting_field", splitting_json(H)}, {"u0", punit_json(H, u)}, {"ord", r.ord},
              {"log", to_json(r.log)}, {"L", to_json(r.L)}, {"f_sigma", f}, {"ledger", to_json(r.ledger)}};
}

inline Json linv_sum_check(const RunConfig& c) {
  BaseField F(c.disc);
  HeckeCharacter phi = parse_character(F, c.chi).primitive();
  LSumCheck s = l_invariant_sum_check(phi, c.p, c.N, c.iota);
  return Json{{"L", to_json(s.L)}, {"L_inverse", to_json(s.L_inverse)}, {"sum", to_json(s.sum)}, {"nonzero", s.nonzero}};
}

inline Json linv_rank_check(const RunConfig& c) {
  BaseField F(c.disc);
  HeckeCharacter phi = parse_character(F, c.chi).primitive();
  RankCheck r = cocycle_rank_check(phi, c.p, c.N, c.iota);
  Json j{{"d", r.d}, {"d_p", r.d_p}, {"rank", r.rank}, {"observed_kernel", r.observed},
         {"expected_kernel", r.expected}, {"match", r.observed == r.expected}, {"second_choice_agrees", r.alt_agrees}};
  j["ord_multiple"] = r.ord_multiple ? to_json(*r.ord_multiple) : Json(nullptr);
  return j;
}

inline Json family_json(const InfinitesimalFamily& fam) {
  PadicNumber check = fam.lambda + fam.mu + PadicNumber(fam.p, 1, fam.N) / fam.log_u;
  return Json{{"case", case_name(fam.kase)}, {"prime", ideal_json(fam.field(), fam.prime)},
              {"L", to_json(fam.L)}, {"L_inverse", to_json(fam.L_inv)}, {"log_u", to_json(fam.log_u)},
              {"lambda", to_json(fam.lambda)}, {"mu", to_json(fam.mu)},
              {"lambda_plus_mu_plus_inv_log_u", to_json(check)}, {"eps_to_X", InfinitesimalFamily::kEpsToX}};
}

inline Json deform_coeffs(const RunConfig& c) {
  BaseField F(c.disc);
  HeckeCharacter phi = parse_character(F, c.chi);
  InfinitesimalFamily fam = build_family(phi, c.p, c.N, c.u_value(), c.iota);
  Json j{{"family", family_json(fam)}};
  Json rows = Json::array();
  for (auto& [b, fact] : ideals_up_to(F, c.bound)) {
    if (!coprime(F, b, fam.phi.conductor())) continue;
    DualNumber d = fam.coeff(b);
    rows.push_back(Json{{"ideal", ideal_json(F, b)}, {"c0", to_json(d.a)}, {"c1", to_json(d.b)}});
  }
  j["coefficients"] = rows;
  Json U = Json::array();
  for (auto& P : primes_above(F, Int(c.p))) U.push_back(Json{{"prime", ideal_json(F, P.ideal)}, {"c1", to_json(fam.table_U(P.ideal))}});
  j["U_p"] = U;
  CalibrationReport cal = calibrate(fam, 50);
  Json mism = Json::array();
  for (auto& I : cal.mismatches) mism.push_back(ideal_json(F, I));
  j["calibration"] = Json{{"reference", ideal_json(F, cal.reference)}, {"constant", to_json(cal.constant)},
                          {"checked", cal.checked}, {"mismatches", mism}, {"consistent", cal.consistent()}};
  return j;
}

inline Json deform_gross_stark(const RunConfig& c) {
  BaseField F(c.disc);
  HeckeCharacter phi = parse_character(F, c.chi);
  GrossStarkReport r = gross_stark_check(phi, c.p, c.M, c.N, -1, c.u_value(), c.iota);
  return Json{{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"L", to_json(r.L)}, {"log_u", to_json(r.log_u)},
              {"L0", to_json(r.L0)}, {"difference_valuation", r.difference_valuation}, {"digits", r.digits},
              {"pass", r.pass}, {"zeta_ledger", to_json(r.zeta_ledger)}, {"linv_ledger", to_json(r.linv_ledger)}};
}

inline Json deform_combo_check(const RunConfig& c) {
  BaseField F(c.disc);
  HeckeCharacter phi = parse_character(F, c.chi);
  InfinitesimalFamily fam = build_family(phi, c.p, c.N, c.u_value(), c.iota);
  CombinationReport r = eisenstein_combination_check(fam, c.bound, std::max(2L, c.M));
  Json rows = Json::array();
  for (auto& x : r.rows)
    rows.push_back(Json{{"ideal", ideal_json(F, x.b)}, {"lhs", to_json(x.lhs)}, {"rhs", to_json(x.rhs)}, {"equal", x.equal}});
  return Json{{"family", family_json(fam)}, {"rows", rows}, {"skipped_not_prime_to_conductor", r.skipped},
              {"min_precision", r.min_precision}, {"pass", r.pass}};
}

}  // namespace cmd

struct CommandSpec {
  const char* group;
  const char* action;
  Json (*run)(const RunConfig&);
};

inline const std::vector<CommandSpec>& commands() {
  static const std::vector<CommandSpec> v = {
      {"field", "info", cmd::field_info},          {"chars", "list", cmd::chars_list},
      {"chars", "show", cmd::chars_show},          {"eis", "coeffs", cmd::eis_coeffs},
      {"eis", "constant", cmd::eis_constant},      {"zeta", "fit", cmd::zeta_fit},
      {"zeta", "check-zero", cmd::zeta_check_zero}, {"linv", "compute", cmd::linv_compute},
      {"linv", "sum-check", cmd::linv_sum_check},  {"linv", "rank-check", cmd::linv_rank_check},
      {"deform", "coeffs", cmd::deform_coeffs},    {"deform", "gross-stark", cmd::deform_gross_stark},
      {"deform", "combo-check", cmd::deform_combo_check},
  };
  return v;
}

// Runs one command; the result payload is memoized in the cache under the command name and config.
inline Json run_command(const std::string& group, const std::string& action, const RunConfig& cfg, Cache& cache) {
  cfg.validate();
  Json conf = cfg.to_json();
  for (auto& c : commands()) {
    if (group != c.group || action != c.action) continue;
    std::string key = group + " " + action + " " + conf.dump();
    Json result = cache.get_or_compute(key, [&] { return c.run(cfg); });
    return Json{{"tool", "trivzero"}, {"version", kToolVersion}, {"command", group + " " + action}, {"config", conf}, {"result", result}};
  }
  fail(ErrorKind::Usage, "unknown command: " + group + " " + action);
}

// "path: value" lines of the same document
inline void render_pretty(const Json& j, std::ostream& os, const std::string& path = "") {
  if (j.is_object()) {
    if (j.contains("p") && j.contains("val") && j.contains("unit") && j.contains("prec")) {
      os << path << ": " << padic_from_json(j).to_string() << "\n";
      return;
    }
    for (auto& [k, v] : j.items()) render_pretty(v, os, path.empty() ? k : path + "." + k);
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) render_pretty(j[i], os, path + "[" + std::to_string(i) + "]");
  } else {
    os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace tz
