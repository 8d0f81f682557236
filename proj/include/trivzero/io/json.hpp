#pragma once
#include <json.hpp>

#include "trivzero/chars/hecke_character.hpp"
#include "trivzero/padic/fit.hpp"
#include "trivzero/padic/quad_padic.hpp"
#include "trivzero/padic/series.hpp"

namespace tz {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rat& r) { return r.get_str(); }
inline Json to_json(const Int& n) { return n.get_str(); }

// {"p", "val", "unit": base-p digits of the unit part, "prec"}; zero has val = prec and unit "0"
inline Json to_json(const PadicNumber& x) {
  Json j;
  j["p"] = x.prime();
  j["val"] = x.is_zero() ? x.precision() : x.valuation();
  j["unit"] = x.is_zero() ? std::string("0") : x.unit_digits();
  j["prec"] = x.precision();
  return j;
}

inline PadicNumber padic_from_json(const Json& j) {
  long p = j.at("p").get<long>(), val = j.at("val").get<long>(), prec = j.at("prec").get<long>();
  std::string digits = j.at("unit").get<std::string>();
  if (digits == "0") return PadicNumber::zero(p, prec);
  Int u(digits, static_cast<int>(p));
  return PadicNumber(p, Rat(u) * rpow(Rat(p), val), prec);
}

inline Json to_json(const QuadPadic& x) {
  return Json{{"a", to_json(x.a())}, {"b", to_json(x.b())}, {"sqrt", x.nonresidue()}};
}

inline Json to_json(const PadicSeries& s) {
  Json a = Json::array();
  for (long i = 0; i <= s.degree(); ++i) a.push_back(to_json(s.coeff(i)));
  return a;
}

inline Json to_json(const PrecisionLedger& l) {
  Json steps = Json::array();
  for (auto& s : l.steps) steps.push_back(Json{{"step", s.name}, {"loss", s.loss}});
  return Json{{"input", l.input}, {"steps", steps}, {"output", l.output()}};
}

inline Json to_json(const BaseField& F, const Ideal& I) {
  return Json{{"norm", to_json(I.norm())}, {"hnf", Json::array({to_json(I.a), to_json(I.b), to_json(I.c)})},
              {"label", I.to_string(F)}};
}

inline Json to_json(const RootOfUnity& z) { return z.to_string(); }

inline Json to_json(const CyclotomicNumber& c) {
  Json j{{"level", c.level()}, {"value", c.to_string()}};
  Json co = Json::array();
  for (auto& v : c.coeffs()) co.push_back(to_json(v));
  j["coeffs"] = co;
  return j;
}

inline CyclotomicNumber cyclotomic_from_json(const Json& j) {
  std::vector<Rat> c;
  for (auto& v : j.at("coeffs")) c.push_back(Rat(v.get<std::string>()));
  for (auto& v : c) v.canonicalize();
  return CyclotomicNumber::from_coeffs(j.at("level").get<long>(), c);
}

inline Json to_json(const HeckeCharacter& chi) {
  const BaseField& F = chi.field();
  Json vals = Json::array();
  for (auto& v : chi.values()) vals.push_back(to_json(v));
  Json inv = Json::array();
  for (auto& d : chi.group().invariants()) inv.push_back(to_json(d));
  return Json{{"id", chi.id()},
              {"modulus", to_json(F, chi.modulus())},
              {"conductor", to_json(F, chi.conductor())},
              {"invariants", inv},
              {"values", vals},
              {"order", chi.order()},
              {"totally_odd", is_totally_odd(chi)}};
}

}  // namespace tz
