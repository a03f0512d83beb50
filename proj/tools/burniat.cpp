// burniat <command> --config <path> [--height N] [--json]

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "burniat/errors.hpp"
#include "burniat/report_io.hpp"

using namespace burniat;

namespace {

struct Options {
  std::string config;
  std::optional<std::uint64_t> height;
  bool json = false;
  bool all = false;
  int projection = 0;
  std::string x0;
  std::string twist = "1,1,1";
};

Config load(const Options& o) {
  Config cfg = load_config(o.config);
  if (o.height) {
    if (*o.height < 1 || *o.height > kMaxHeight)
      throw DomainError("--height: must be between 1 and " + std::to_string(kMaxHeight));
    cfg.height = *o.height;
  }
  return cfg;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

TwistClass parse_twist(const std::string& text) {
  TwistClass T;
  std::stringstream ss(text);
  std::string part;
  int i = 0;
  while (std::getline(ss, part, ',')) {
    if (i == 3) throw DomainError("--twist: expected three comma-separated integers");
    Rational q;
    try {
      q = Rational::parse(part);
    } catch (const DomainError&) {
      throw DomainError("--twist: '" + part + "' is not an integer");
    }
    if (!q.is_integer() || !is_squarefree(q.num())) throw DomainError("--twist: '" + part + "' is not a squarefree integer");
    T.d[static_cast<std::size_t>(i++)] = q.num();
  }
  if (i != 3) throw DomainError("--twist: expected three comma-separated integers");
  return T;
}

int cmd_invariants(const Options& o) {
  Config cfg = load(o);
  const BurniatSurface& S = cfg.surface;
  Rational D = discriminant_D(S);
  SigmaInvariants sg = sigma(S);
  bool smooth = !D.is_zero();
  PrimeSet bad = smooth ? bad_primes(S) : PrimeSet();
  if (o.json) {
    Json j{{"surface", S}, {"D", D}, {"smooth", smooth}, {"sigma", sg}, {"sigma_discriminant", sigma_discriminant(sg)}};
    j["bad_primes"] = smooth ? Json(bad) : Json(nullptr);
    emit(j);
    return 0;
  }
  std::cout << "D = " << D.str() << (smooth ? "" : " (singular surface)") << "\n";
  std::cout << "sigma = (" << sg.sigma1.str() << ", " << sg.sigma2.str() << ", " << sg.sigma3.str() << ", "
            << sg.sigma4.str() << ")\n";
  std::cout << "sigma4 - 4 sigma3 + 16 sigma2 - 64 sigma1 = " << sigma_discriminant(sg).str() << "\n";
  if (smooth) std::cout << "bad primes: " << bad.str() << "\n";
  return 0;
}

int cmd_moduli(const Options& o) {
  Config cfg = load(o);
  ModuliPoint P = moduli_point(cfg.surface);
  StrataFlags F = strata(P);
  std::string group = automorphism_group(F);
  CensusCounts c = census(cfg.surface);
  if (o.json) {
    emit(Json{{"point", P},
              {"valid", validate_moduli(P)},
              {"strata", F},
              {"automorphism_group", group},
              {"census", c},
              {"generic", is_generic(cfg.surface)}});
    return 0;
  }
  std::cout << "moduli point: " << to_string(P) << (validate_moduli(P) ? "" : " (fails the moduli equations)") << "\n";
  std::cout << "strata: " << to_string(F) << "\n";
  std::cout << "automorphism group: " << group << "\n";
  std::cout << "census: (" << c.infinity << ", " << c.typeI << ", " << c.typeII << ")\n";
  return 0;
}

int cmd_twists(const Options& o) {
  Config cfg = load(o);
  auto recs = filter_twists(cfg.surface, cfg.height, FilterOptions{cfg.extra_primes});
  std::size_t empty = 0, found = 0, undetermined = 0;
  Json listed = Json::array();
  for (const auto& r : recs) {
    switch (r.status.kind) {
      case TwistStatusKind::EmptyProven: ++empty; break;
      case TwistStatusKind::PointsFound: ++found; break;
      case TwistStatusKind::Undetermined: ++undetermined; break;
    }
    if (o.all || r.status.kind != TwistStatusKind::EmptyProven) listed.push_back(r);
  }
  if (o.json) {
    emit(Json{{"primes", bad_primes(cfg.surface).unite(cfg.extra_primes)},
              {"height", cfg.height},
              {"total", recs.size()},
              {"EmptyProven", empty},
              {"PointsFound", found},
              {"Undetermined", undetermined},
              {"twists", listed}});
    return 0;
  }
  std::cout << recs.size() << " twists over " << bad_primes(cfg.surface).unite(cfg.extra_primes).str() << ": " << empty
            << " EmptyProven, " << found << " PointsFound, " << undetermined << " Undetermined\n";
  for (const auto& r : recs) {
    if (!o.all && r.status.kind == TwistStatusKind::EmptyProven) continue;
    std::cout << "  " << r.twist.str() << "  " << to_string(r.status.kind);
    if (r.status.kind == TwistStatusKind::EmptyProven)
      std::cout << " (E" << r.status.witness_curve << " at " << r.status.witness_place.str() << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_search(const Options& o) {
  Config cfg = load(o);
  const BurniatSurface& S = cfg.surface;
  if (!is_smooth_surface(S)) throw DomainError("search needs a smooth surface");
  auto recs = filter_twists(S, cfg.height, FilterOptions{cfg.extra_primes});
  auto plans = plan(S, recs, cfg.oracle, cfg.height);
  Json out = Json::array();
  for (const auto& p : plans) {
    TwistedSurface T = twist_surface(S, p.twist);
    auto pts = search_twist_with(T, cfg.height, p.factors[0], p.factors[1]);
    int orbits = orbit_count(T.surface, pts);
    long sporadic = 0;
    Json classified = Json::array();
    for (const auto& P : pts) {
      ClassifiedPoint cp = classify(S, T, P);
      sporadic += cp.kind == PointKind::SporadicCandidate;
      classified.push_back(cp);
    }
    if (o.json) {
      out.push_back(Json{{"plan", p}, {"orbits", orbits}, {"points", classified}});
    } else {
      std::cout << p.twist.str() << "  factors E" << p.factors[0] << "/E" << p.factors[1] << ": " << pts.size()
                << " points, " << orbits << " orbits, " << sporadic << " sporadic candidates\n";
      for (const auto& P : pts) std::cout << "  " << P.str() << "\n";
    }
  }
  if (o.json) emit(Json{{"height", cfg.height}, {"twists", out}});
  return 0;
}

int cmd_report(const Options& o) {
  Config cfg = load(o);
  SurfaceReport R = report(cfg.surface, ReportOptions{cfg.height, cfg.extra_primes, cfg.oracle});
  if (o.json)
    emit(Json(R));
  else
    std::cout << report_text(R);
  return 0;
}

int cmd_fiber(const Options& o) {
  Config cfg = load(o);
  Rational x0;
  try {
    x0 = Rational::parse(o.x0);
  } catch (const DomainError& e) {
    throw DomainError("--x0: " + std::string(e.what()));
  }
  TwistClass tw = parse_twist(o.twist);
  TwistedSurface T = twist_surface(cfg.surface, tw);
  FiberModels f = fiber_models(T.surface, o.projection, x0);
  FiberType type = fiber_type(T.surface, o.projection, x0);
  if (o.json) {
    emit(Json{{"twist", tw}, {"models", f}, {"type", to_string(type)}});
    return 0;
  }
  std::cout << "fiber over x" << o.projection << " = " << x0.str() << " on twist " << tw.str() << ": " << to_string(type)
            << "\n";
  std::cout << "D: " << to_string(f.curveD) << "\n";
  std::cout << "E: " << to_string(f.curveE) << "\n";
  std::cout << "F: " << to_string(f.curveF) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational points on primary Burniat surfaces"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "JSON configuration")->required();
    sub->add_option("--height", o.height, "search height bound (default 1000)");
    sub->add_flag("--json", o.json, "structured output");
  };
  auto* inv = app.add_subcommand("invariants", "discriminant, sigma invariants, bad primes");
  auto* mod = app.add_subcommand("moduli", "moduli point, strata, automorphism group, census");
  auto* tws = app.add_subcommand("twists", "twist enumeration with local-solvability statuses");
  auto* sch = app.add_subcommand("search", "bounded point search on surviving twists");
  auto* rep = app.add_subcommand("report", "full report");
  auto* fib = app.add_subcommand("fiber", "fiber models over x_j = x0");
  for (auto* s : {inv, mod, tws, sch, rep, fib}) common(s);
  tws->add_flag("--all", o.all, "list EmptyProven twists too");
  fib->add_option("--projection", o.projection, "j in 1..3")->required();
  fib->add_option("--x0", o.x0, "fiber value, integer or p/q")->required();
  fib->add_option("--twist", o.twist, "twist as d1,d2,d3 (default 1,1,1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*inv) return cmd_invariants(o);
    if (*mod) return cmd_moduli(o);
    if (*tws) return cmd_twists(o);
    if (*sch) return cmd_search(o);
    if (*rep) return cmd_report(o);
    if (*fib) return cmd_fiber(o);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
