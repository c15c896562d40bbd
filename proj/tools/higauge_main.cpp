#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <nlohmann/json.hpp>

#include "higauge/suites.hpp"

using namespace higauge;

namespace {

int cmd_validate(const std::string& fixture) {
  try {
    auto xm = resolve_module(fixture);
    auto repg = validate_lie_algebra(xm->g);
    auto reph = validate_lie_algebra(xm->h);
    auto repx = validate_crossed_module(*xm);
    std::cout << "lie algebra g (" << xm->g.name() << "): " << repg.str() << "\n";
    std::cout << "lie algebra h (" << xm->h.name() << "): " << reph.str() << "\n";
    std::cout << "crossed module (" << xm->name << "): " << repx.str() << "\n";
    bool ok = repg.ok() && reph.ok() && repx.ok();
    if (ok) {
      for (int n = 1; n <= 2; ++n) {
        auto p = symmetrized_trace_pairing(xm, n);
        auto repp = validate_pairing_full(p);
        std::cout << "symmetrized trace pairing n=" << n << ": " << repp.str()
                  << (p.is_zero() ? " (identically zero)" : "") << "\n";
        ok = ok && repp.ok();
      }
    }
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_run(const SuiteConfig& cfg, const std::string& out_path) {
  try {
    auto report = run_suites(cfg);
    std::cout << verification_report_summary(report);
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      out << verification_report_to_json(report).dump(2) << "\n";
      std::cout << "report written to " << out_path << "\n";
    }
    return report.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

// Residual checks for one explicit instance read from a file. Accepts the
// failure-dump format written by `run --dump-dir` ({"fixture", "n",
// "connection": {...}, "gauge": {...}}) as well as a bare connection object
// ({"A": ..., "B": ...}).
int cmd_check(const std::string& path, std::string fixture, int n) {
  try {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Structural, "cannot read " + path);
    json j;
    in >> j;
    if (j.contains("fixture")) fixture = j["fixture"].get<std::string>();
    if (j.contains("n")) n = j["n"].get<int>();
    auto xm = resolve_module(fixture);
    Pairing p = symmetrized_trace_pairing(xm, n);

    std::optional<TwoConnection> conn;
    if (j.contains("connection")) conn = connection_from_json(j["connection"], xm);
    else if (j.contains("A") && j.contains("B")) conn = connection_from_json(j, xm);
    std::optional<GaugeData> gauge;
    if (j.contains("gauge")) gauge = gauge_from_json(j["gauge"], xm);
    else if (j.contains("g") && j.contains("phi")) gauge = gauge_from_json(j, xm);
    if (!conn && !gauge)
      throw Error(ErrorKind::Structural, "no connection or gauge data found in " + path);

    bool all_zero = true;
    auto report = [&](const std::string& name, const PolyForm& r) {
      bool zero = r.is_zero();
      all_zero = all_zero && zero;
      std::cout << name << ": " << (zero ? "zero" : "NONZERO") << "\n";
      if (!zero) std::cout << "  " << r.str() << "\n";
    };
    if (conn) {
      auto [b1, b2] = bianchi_residuals(*conn);
      report("bianchi-1", b1);
      report("bianchi-2", b2);
      if (!p.is_zero()) report("cs-descent", cs_descent_residual(*conn, p));
    }
    if (gauge && conn) {
      auto [rF, rG] = curvature_covariance_residuals(*conn, *gauge);
      report("covariance-F", rF);
      report("covariance-G", rG);
      if (!p.is_zero()) {
        report("tr1", descent_residual(*conn, *gauge, p));
        report("gwzw-exactness", gwzw_exactness_residual(*conn, *gauge, p));
      }
    } else if (gauge && !p.is_zero()) {
      auto w = wzw_term(*gauge, p);
      report("wzw-term", w.form);
      report("wzw-reduction-identity", w.lhs_identity - w.rhs_identity);
    }
    return all_zero ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

TwoConnection worked_connection(const CrossedModulePtr& xm) {
  // A = x2 dx1 E, B = x5 dx3^dx4 F on a 5-dimensional patch.
  TwoConnection c = TwoConnection::zero(5, xm);
  c.A.accumulate(1u << 0, 1, Poly::var(1));
  c.B.accumulate((1u << 2) | (1u << 3), 2, Poly::var(4));
  return c;
}

int cmd_show_example(const std::string& which) {
  auto xm = builtin_module("adjoint:sl2");
  auto p = symmetrized_trace_pairing(xm, 1);
  if (which == "cs") {
    TwoConnection c = worked_connection(xm);
    auto [F, G] = curvatures(c);
    std::cout << "A      = " << c.A.str() << "\n";
    std::cout << "B      = " << c.B.str() << "\n";
    std::cout << "F      = " << F.str() << "\n";
    std::cout << "G      = " << G.str() << "\n";
    PolyForm q = cs_form(c, p);
    std::cout << "Q4     = " << q.str() << "\n";
    std::cout << "dQ4    = " << d(q).str() << "\n";
    std::vector<PolyForm> slots{F};
    std::cout << "<F, G> = " << pair_forms(p, slots, G).str() << "\n";
    return 0;
  }
  if (which == "wzw") {
    // phi = x1 dx2 E + x3 dx4 F with trivial g: the term vanishes here even
    // though V and W do not.
    GaugeData gd = GaugeData::trivial(5, xm);
    gd.phi.accumulate(1u << 1, 1, Poly::var(0));
    gd.phi.accumulate(1u << 3, 2, Poly::var(2));
    auto w = wzw_term(gd, p);
    auto vw = vw_fields(gd);
    std::cout << "phi    = " << gd.phi.str() << "\n";
    std::cout << "V      = " << vw.V.str() << "\n";
    std::cout << "W      = " << vw.W.str() << "\n";
    std::cout << "wzw    = " << w.form.str() << "\n";
    std::cout << "<V^2n,W> = " << w.contraction.str() << "\n";
    auto coeff = wzw_closed_form_coefficient(1);
    std::cout << "beta   = " << to_string(coeff.beta)
              << ", closed-form factor = " << to_string(coeff.closed_form) << "\n";
    std::cout << "note: for generic phi this term is exact but nonzero; try\n"
                 "  phi = x3 dx1 E + dx2 F + x5 dx4 H\n";
    GaugeData gd2 = GaugeData::trivial(5, xm);
    gd2.phi.accumulate(1u << 0, 1, Poly::var(2));
    gd2.phi.accumulate(1u << 1, 2, Poly::constant(Rat(1)));
    gd2.phi.accumulate(1u << 3, 0, Poly::var(4));
    auto w2 = wzw_term(gd2, p);
    std::cout << "wzw(generic phi) = " << w2.form.str() << "\n";
    return 0;
  }
  if (which == "gwzw") {
    TwoConnection c = worked_connection(xm);
    RatMat gmat(2, 2);
    gmat(0, 0) = Rat(2);
    gmat(1, 1) = Rat(1, 2);
    GaugeData gd{GroupMap::constant(gmat), PolyForm::zero(5, 1, VKind::AlgH, xm)};
    PolyForm q = gwzw_form(c, gd, p);
    std::cout << "g      = diag(2, 1/2), phi = 0\n";
    std::cout << "gwzw   = " << q.str() << "\n";
    std::cout << "exactness residual = " << gwzw_exactness_residual(c, gd, p).str() << "\n";
    return 0;
  }
  std::cerr << "unknown example '" << which << "' (expected cs|wzw|gwzw)\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculus and identity verifier for strict higher gauge theory"};
  app.require_subcommand(1);

  std::string fixture = "adjoint:sl2";
  auto* validate = app.add_subcommand("validate", "Validate a crossed-module fixture");
  validate->add_option("fixture", fixture, "builtin name or fixture file path")->required();

  SuiteConfig cfg;
  std::string mode = "exact";
  std::string suites = "all";
  std::string out_path;
  long index = -1;
  auto* run = app.add_subcommand("run", "Run verification suites");
  run->add_option("--fixture", cfg.fixture, "builtin name or fixture file path");
  run->add_option("--n", cfg.n, "pairing degree");
  run->add_option("--dim", cfg.patch_dim, "patch dimension");
  run->add_option("--instances", cfg.instances, "instances per suite");
  run->add_option("--seed", cfg.seed, "base seed");
  run->add_option("--mode", mode, "exact | numeric");
  run->add_option("--tolerance", cfg.tolerance, "relative tolerance (numeric mode)");
  run->add_option("--suites", suites, "comma list or 'all'");
  run->add_option("--degree-cap", cfg.caps.degree_cap, "coefficient degree cap");
  run->add_option("--sparsity", cfg.caps.sparsity, "monomials per coefficient");
  run->add_option("--workers", cfg.workers, "worker threads (0 = HIGAUGE_WORKERS or hardware)");
  run->add_option("--dump-dir", cfg.dump_dir, "directory for failing-instance fixtures");
  run->add_option("--index", index, "run only this instance index");
  run->add_option("--out", out_path, "write the JSON report here");

  std::string example;
  auto* show = app.add_subcommand("show-example", "Print a worked example");
  show->add_option("which", example, "cs | wzw | gwzw")->required();

  std::string check_path, check_fixture = "adjoint:sl2";
  int check_n = 1;
  auto* check = app.add_subcommand("check", "Run residual checks on one instance file");
  check->add_option("instance", check_path, "instance or failure-dump JSON")->required();
  check->add_option("--fixture", check_fixture, "module (overridden by the file if present)");
  check->add_option("--n", check_n, "pairing degree (overridden by the file if present)");

  CLI11_PARSE(app, argc, argv);

  if (*validate) return cmd_validate(fixture);
  if (*show) return cmd_show_example(example);
  if (*check) return cmd_check(check_path, check_fixture, check_n);

  if (mode == "numeric") cfg.mode = Mode::Numeric;
  else if (mode == "exact") cfg.mode = Mode::Exact;
  else {
    std::cerr << "unknown mode '" << mode << "'\n";
    return 2;
  }
  if (index >= 0) cfg.only_index = static_cast<uint64_t>(index);
  if (suites != "all") {
    cfg.suites.clear();
    std::stringstream ss(suites);
    std::string item;
    while (std::getline(ss, item, ',')) cfg.suites.push_back(item);
  }
  return cmd_run(cfg, out_path);
}
