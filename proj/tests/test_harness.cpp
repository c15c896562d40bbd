#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "higauge/suites.hpp"

using namespace higauge;

TEST_SUITE_BEGIN("harness");

TEST_CASE("generation is deterministic in (config, seed)") {
  auto xm = builtin_module("adjoint:sl2");
  GenCaps caps;
  TwoConnection a = gen_connection(xm, 5, caps, 1234);
  TwoConnection b = gen_connection(xm, 5, caps, 1234);
  CHECK(a.A == b.A);
  CHECK(a.B == b.B);
  TwoConnection c = gen_connection(xm, 5, caps, 1235);
  CHECK((a.A != c.A || a.B != c.B));

  GaugeData g1 = gen_gauge(xm, 5, caps, 99, GaugeKindSelect::Cycle, 2);
  GaugeData g2 = gen_gauge(xm, 5, caps, 99, GaugeKindSelect::Cycle, 2);
  CHECK(g1.phi == g2.phi);
  CHECK(g1.g.matrix() == g2.g.matrix());
}

TEST_CASE("degree cap zero yields constant coefficients") {
  auto xm = builtin_module("adjoint:sl2");
  GenCaps caps;
  caps.degree_cap = 0;
  Rng rng(7);
  for (int i = 0; i < 10; ++i) CHECK(gen_poly(rng, 5, caps).total_degree() == 0);
}

TEST_CASE("identity-only selection yields pure-phi gauges") {
  auto xm = builtin_module("adjoint:sl2");
  GenCaps caps;
  GaugeData gd = gen_gauge(xm, 5, caps, 5, GaugeKindSelect::IdentityOnly, 7);
  CHECK(gd.g.is_identity());
  CHECK_FALSE(gd.phi.is_zero());
}

TEST_CASE("unipotent draws invert exactly") {
  auto xm = builtin_module("adjoint:sl2");
  GenCaps caps;
  GaugeData gd = gen_gauge(xm, 5, caps, 6, GaugeKindSelect::UnipotentOnly, 0);
  CHECK(gd.g.matrix() * gd.g.inverse() == PolyMat::identity(2));
  CHECK(gd.g.kind() == GroupMap::Kind::Unipotent);
}

TEST_CASE("fixture and form serialization round-trips") {
  auto xm = builtin_module("adjoint:sl2");
  json jm = module_to_json(*xm);
  auto back = module_from_json(jm);
  CHECK(validate_crossed_module(*back).ok());
  CHECK(back->g.dim() == 3);

  GenCaps caps;
  TwoConnection c = gen_connection(xm, 5, caps, 77);
  TwoConnection c2 = connection_from_json(connection_to_json(c), xm);
  CHECK(c2.A == c.A);
  CHECK(c2.B == c.B);

  GaugeData gd = gen_gauge(xm, 5, caps, 78, GaugeKindSelect::Cycle, 2);
  GaugeData gd2 = gauge_from_json(gauge_to_json(gd), xm);
  CHECK(gd2.phi == gd.phi);
  CHECK(gd2.g.matrix() == gd.g.matrix());
}

TEST_CASE("resolve_module reads fixture files from disk") {
  auto xm = builtin_module("abelian:sl2-defining");
  std::string path = "test_fixture_roundtrip.json";
  {
    std::ofstream out(path);
    out << module_to_json(*xm).dump(2);
  }
  auto loaded = resolve_module(path);
  CHECK(validate_crossed_module(*loaded).ok());
  CHECK(loaded->group_kind == GroupActionKind::DefiningRep);
  std::remove(path.c_str());
  CHECK_THROWS_AS(resolve_module("no-such-fixture"), Error);
}

TEST_CASE("a small exact run passes the core suites") {
  SuiteConfig cfg;
  cfg.fixture = "adjoint:sl2";
  cfg.instances = 3;
  cfg.seed = 7;
  cfg.suites = {"axioms", "forms", "bianchi", "covariance", "compose", "cs-descent"};
  auto report = run_suites(cfg);
  CHECK(report.ok());
  for (const auto& s : report.suites) CHECK(s.failure_count() == 0);
  json j = verification_report_to_json(report);
  CHECK(j["ok"].get<bool>());
}

TEST_CASE("reports are deterministic given (config, seed)") {
  SuiteConfig cfg;
  cfg.instances = 2;
  cfg.seed = 11;
  cfg.suites = {"bianchi", "eq1"};
  auto r1 = verification_report_to_json(run_suites(cfg));
  auto r2 = verification_report_to_json(run_suites(cfg));
  // wall times differ; compare everything else
  for (auto& s : r1["suites"]) s.erase("wall_ms");
  for (auto& s : r2["suites"]) s.erase("wall_ms");
  CHECK(r1 == r2);
}

TEST_CASE("sabotaged fixture fails axioms and downstream suites are skipped") {
  SuiteConfig cfg;
  cfg.fixture = "sabotage:peiffer";
  cfg.instances = 2;
  cfg.suites = {"axioms", "bianchi"};
  auto report = run_suites(cfg);
  CHECK_FALSE(report.ok());
  CHECK_FALSE(report.suites[0].ok());
  CHECK(report.suites[1].skipped);
}

TEST_CASE("abelian fixture reports pairing-dependent suites as vacuous") {
  SuiteConfig cfg;
  cfg.fixture = "abelian:sl2-defining";
  cfg.instances = 2;
  cfg.suites = {"axioms", "bianchi", "cs-descent", "wzw"};
  auto report = run_suites(cfg);
  CHECK(report.ok());
  CHECK(report.suites[2].vacuous == 2);
  CHECK(report.suites[3].vacuous == 2);
}

TEST_CASE("numeric mode reports residual magnitudes below tolerance") {
  SuiteConfig cfg;
  cfg.mode = Mode::Numeric;
  cfg.tolerance = 1e-9;
  cfg.instances = 2;
  cfg.suites = {"bianchi", "cs-descent"};
  auto report = run_suites(cfg);
  CHECK(report.ok());
  for (const auto& s : report.suites) CHECK(s.max_numeric_residual <= 1e-9);
}

TEST_CASE("failure records carry a reproduction command") {
  SuiteConfig cfg;
  cfg.instances = 12;
  cfg.seed = 4242;
  cfg.suites = {"wzw"};  // fails on generic draws by the nonvanishing analysis
  cfg.dump_dir = "test_dumps";
  auto report = run_suites(cfg);
  bool found_failure = false;
  for (const auto& s : report.suites)
    for (const auto& f : s.failures) {
      found_failure = true;
      CHECK_FALSE(f.dump_path.empty());
      std::ifstream check(f.dump_path);
      CHECK(check.good());
    }
  CHECK(found_failure);
  json j = verification_report_to_json(report);
  bool has_repro = false;
  for (const auto& s : j["suites"])
    for (const auto& f : s["failure_records"])
      has_repro |= f.contains("reproduce");
  CHECK(has_repro);
  std::filesystem::remove_all("test_dumps");
}

TEST_SUITE_END();
