// trivzero command-line driver: one JSON document on stdout per run.
#include <CLI11.hpp>
#include <iostream>

#include "trivzero/app/selftest.hpp"

namespace {

int emit(const tz::Json& doc, bool pretty) {
  if (pretty)
    tz::render_pretty(doc, std::cout);
  else
    std::cout << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  tz::RunConfig cfg;
  cfg.N = tz::default_precision();
  cfg.cache_dir = tz::default_cache_dir();

  CLI::App app{"trivzero: trivial zeros, L-invariants and weight-one Eisenstein families"};
  app.set_config("--config", "", "TOML file with option values (flags win)");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--disc", cfg.disc, "discriminant of F (1 for Q)");
  app.add_option("--chi", cfg.chi, "character: trivial | kron:<d> | mod<N>quad | gen:<modulus>:<values>");
  app.add_option("--chi1", cfg.chi1, "first character of the pair");
  app.add_option("--chi2", cfg.chi2, "second character of the pair (default: --chi)");
  app.add_option("-p,--prime", cfg.p, "odd prime p");
  app.add_option("-u", cfg.u, "topological generator u (default 1+p)");
  app.add_option("-N,--precision", cfg.N, "p-adic precision");
  app.add_option("-M,--truncation", cfg.M, "series truncation degree");
  app.add_option("-B,--bound", cfg.bound, "norm bound for sweeps");
  app.add_option("--weight", cfg.weight, "eis coeffs: specialize at this weight");
  app.add_option("--modulus", cfg.modulus, "chars list: modulus (rational integer)");
  app.add_option("--search-bound", cfg.search_bound, "p-unit search bound");
  app.add_option("--exponent-scale", cfg.exponent_scale, "p-unit search: norm p^(scale h)");
  app.add_option("--power", cfg.power, "replace u0 by u0^power");
  app.add_option("--iota", cfg.iota, "which prime above a split p iota_p selects (0 or 1)");
  app.add_option("--cache-dir", cfg.cache_dir, "cache directory");
  app.add_flag("--no-cache", cfg.no_cache, "bypass the cache");
  app.add_flag("--pretty", cfg.pretty, "render as path: value lines");

  std::string group, action;
  auto add_group = [&](const std::string& name, const std::string& desc, std::vector<std::string> actions) {
    auto* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    g->fallthrough();
    for (auto& a : actions) {
      auto* s = g->add_subcommand(a);
      s->fallthrough();
      s->callback([&group, &action, name, a] {
        group = name;
        action = a;
      });
    }
  };
  add_group("field", "field data", {"info"});
  add_group("chars", "Hecke characters", {"list", "show"});
  add_group("eis", "Eisenstein families", {"coeffs", "constant"});
  add_group("zeta", "p-adic zeta functions", {"fit", "check-zero"});
  add_group("linv", "L-invariants", {"compute", "sum-check", "rank-check"});
  add_group("deform", "mod X^2 cuspidal family", {"coeffs", "gross-stark", "combo-check"});
  auto* st = app.add_subcommand("selftest", "run the built-in example suite");
  st->callback([&] { group = "selftest"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  tz::Cache cache(cfg.cache_dir, !cfg.no_cache);
  tz::CachedLValues store(cache);
  if (cache.enabled()) tz::lvalue_store() = std::shared_ptr<tz::LValueStore>(&store, [](tz::LValueStore*) {});

  try {
    if (group == "selftest") {
      tz::Json doc = tz::run_selftest();
      emit(doc, cfg.pretty);
      return doc["result"]["failed"].get<long>() == 0 ? 0 : 2;
    }
    return emit(tz::run_command(group, action, cfg, cache), cfg.pretty);
  } catch (const tz::Error& e) {
    if (e.kind() == tz::ErrorKind::Usage) {
      std::cerr << "usage error: " << e.what() << "\n";
      return 1;
    }
    tz::Json doc{{"tool", "trivzero"}, {"version", tz::kToolVersion}, {"command", group + " " + action},
                 {"config", cfg.to_json()}, {"error", tz::Json{{"kind", tz::kind_name(e.kind())}, {"message", e.what()}}}};
    emit(doc, cfg.pretty);
    std::cerr << e.what() << "\n";
    return tz::exit_code(e.kind());
  }
}
