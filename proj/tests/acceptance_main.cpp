// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code is nonzero if any
// criterion fails. Known-red criteria are reported honestly; see README.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <vector>

#include "higauge/suites.hpp"

using namespace higauge;

namespace {

struct Criterion {
  int id;
  bool pass;
  std::string label;
  std::string note;
  double seconds;
};

std::vector<Criterion> results;

template <class F>
void run_criterion(int id, const std::string& label, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  std::string note;
  try {
    pass = body(note);
  } catch (const std::exception& e) {
    pass = false;
    note = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  results.push_back({id, pass, label, note, secs});
  std::printf("[%2d] %s  %-58s %7.2fs%s%s\n", id, pass ? "PASS" : "FAIL", label.c_str(), secs,
              note.empty() ? "" : "  -- ", note.c_str());
  std::fflush(stdout);
}

bool within(double secs, double limit, std::string& note) {
  if (secs <= limit) return true;
  std::ostringstream os;
  os << "runtime " << secs << "s exceeds the stated " << limit << "s budget";
  note = os.str();
  return false;
}

uint32_t mask(std::initializer_list<int> one_based) {
  uint32_t m = 0;
  for (int i : one_based) m |= 1u << (i - 1);
  return m;
}

TwoConnection worked_connection(const CrossedModulePtr& xm) {
  TwoConnection c = TwoConnection::zero(5, xm);
  c.A.accumulate(mask({1}), 1, Poly::var(1));     // x2 dx1 E
  c.B.accumulate(mask({3, 4}), 2, Poly::var(4));  // x5 dx3^dx4 F
  return c;
}

SuiteConfig base_config(const std::string& suite, int instances) {
  SuiteConfig cfg;
  cfg.fixture = "adjoint:sl2";
  cfg.n = 1;
  cfg.patch_dim = 5;
  cfg.instances = instances;
  cfg.seed = 42;
  cfg.suites = {suite};
  return cfg;
}

bool suite_clean(const VerificationReport& rep, std::string& note) {
  for (const auto& s : rep.suites) {
    if (s.ok()) continue;
    std::ostringstream os;
    os << s.name << ": " << s.failure_count() << "/" << s.instances << " nonzero";
    if (!s.failures.empty()) os << " (first at index " << s.failures[0].index << ")";
    note = os.str();
    return false;
  }
  return true;
}

// --- criteria ------------------------------------------------------------

bool criterion1(std::string& note) {
  auto t0 = std::chrono::steady_clock::now();
  for (const char* name : {"adjoint:sl2", "adjoint:gl2", "abelian:sl2-defining"}) {
    auto xm = builtin_module(name);
    if (!validate_lie_algebra(xm->g).ok() || !validate_lie_algebra(xm->h).ok() ||
        !validate_crossed_module(*xm).ok()) {
      note = std::string(name) + " failed validation";
      return false;
    }
  }
  auto sab = builtin_module("sabotage:peiffer");
  auto rep = validate_crossed_module(*sab);
  if (rep.ok()) {
    note = "sabotaged fixture validated clean";
    return false;
  }
  if (!rep.has("peiffer", {1, 2})) {  // basis order (H, E, F): E=1, F=2
    note = "Peiffer violation not localized to (E, F)";
    return false;
  }
  for (const auto& item : rep.items)
    if (item.check != "peiffer") {
      note = "unexpected non-Peiffer violation: " + item.check;
      return false;
    }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return within(secs, 1.0, note);
}

bool criterion2(std::string& note) {
  auto t0 = std::chrono::steady_clock::now();
  auto xm = builtin_module("adjoint:sl2");
  for (int n = 1; n <= 3; ++n) {
    Pairing p = symmetrized_trace_pairing(xm, n);
    auto rep = validate_pairing(p);
    if (!rep.ok()) {
      note = "n=" + std::to_string(n) + ": " + rep.str();
      return false;
    }
    // Integrated invariance: symbolic unipotent elements and a constant one.
    PolyMat ne(2, 2), nf(2, 2);
    ne(0, 1) = Poly::var(0);
    nf(1, 0) = Poly::var(1) * Poly::var(1);
    Rng rng(2025);
    for (const GroupMap& g : {GroupMap::unipotent(ne), GroupMap::unipotent(nf),
                              GroupMap::constant(gen_invertible(rng, 2))}) {
      auto inv = validate_pairing_invariance(p, g);
      if (!inv.ok()) {
        note = "n=" + std::to_string(n) + " integrated invariance: " + inv.str();
        return false;
      }
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return within(secs, 5.0, note);
}

bool criterion3(std::string& note) {
  auto t0 = std::chrono::steady_clock::now();
  auto rep = run_suites(base_config("bianchi", 100));
  if (!suite_clean(rep, note)) return false;
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return within(secs, 60.0, note);
}

bool criterion4(std::string& note) {
  auto covariance = run_suites(base_config("covariance", 50));
  if (!suite_clean(covariance, note)) return false;
  auto compose = run_suites(base_config("compose", 50));
  return suite_clean(compose, note);
}

bool criterion5(std::string& note) {
  auto rep = run_suites(base_config("cs-descent", 50));
  if (!suite_clean(rep, note)) return false;

  auto xm = builtin_module("adjoint:sl2");
  Pairing p = symmetrized_trace_pairing(xm, 1);
  TwoConnection c = worked_connection(xm);
  PolyForm q = cs_form(c, p);
  PolyForm expected = PolyForm::scalar_zero(5, 4);
  expected.accumulate(mask({1, 3, 4, 5}), 0, Poly::var(1).scaled(Rat(1, 2)));
  expected.accumulate(mask({1, 2, 3, 4}), 0, Poly::var(4).scaled(Rat(-1, 2)));
  if (!(q == expected)) {
    note = "worked Q4 mismatch: " + q.str();
    return false;
  }
  PolyForm dq_expected = PolyForm::scalar_zero(5, 5);
  dq_expected.accumulate(mask({1, 2, 3, 4, 5}), 0, -Poly::constant(Rat(1)));
  if (!(d(q) == dq_expected)) {
    note = "worked dQ4 mismatch: " + d(q).str();
    return false;
  }
  return true;
}

bool criterion6(std::string& note) {
  auto rep = run_suites(base_config("chern-weil", 25));
  return suite_clean(rep, note);
}

bool criterion7(std::string& note) {
  const Rat betas[] = {Rat(-1, 6), Rat(1, 30), Rat(-1, 140), Rat(1, 630)};
  Poly t = Poly::param_t();
  Poly tt = t * t - t;
  Poly pow = Poly::constant(Rat(1));
  for (int n = 1; n <= 4; ++n) {
    pow *= tt;
    Rat integral = pow.integrate01(Poly::kT).constant_value();
    auto chain = wzw_closed_form_coefficient(n);
    if (integral != betas[n - 1] || chain.beta != betas[n - 1] ||
        Rat(2 * n + 1) * chain.beta != chain.closed_form) {
      note = "beta chain broken at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool criterion8(std::string& note) {
  auto rep = run_suites(base_config("wzw", 50));
  if (suite_clean(rep, note)) {
    note = "all 50 draws vanished (the vanishing is still not an identity; "
           "see the unit counterexample)";
    return true;
  }
  note += "; the term is exact but not identically zero: it equals "
          "(-1)^n n!n!/(2n+1)! d tr((g^-1 V g)^{2n+1})";
  return false;
}

bool criterion9(std::string& note) {
  // Descent relation (tr1) as defined by the descent_residual operation:
  // cs(c^{g,phi}) - cs(c) - wzw(gd) - d(alpha) = 0. The WZW term belongs to
  // the relation; dropping it is valid only where that term vanishes, which
  // criterion 8 shows is not an identity.
  auto rep = run_suites(base_config("tr1", 25));
  return suite_clean(rep, note);
}

bool criterion10(std::string& note) {
  auto eq1 = run_suites(base_config("eq1", 25));
  std::string eq1_note;
  bool eq1_ok = suite_clean(eq1, eq1_note);
  auto gwzw = run_suites(base_config("gwzw", 25));
  std::string gwzw_note;
  bool gwzw_ok = suite_clean(gwzw, gwzw_note);
  std::ostringstream os;
  os << "eq1 " << (eq1_ok ? "holds on 25/25" : ("FAILS: " + eq1_note)) << "; gwzw exactness "
     << (gwzw_ok ? "holds on 25/25"
                 : ("FAILS (" + gwzw_note + "): the residual equals the nonzero WZW term"));
  note = os.str();
  return eq1_ok && gwzw_ok;
}

bool criterion11(std::string& note) {
  auto t0 = std::chrono::steady_clock::now();
  // Degree-2 checks need a module whose cubic symmetric trace is nonzero; the
  // sl2 one vanishes identically, so this spot-check runs on gl2.
  SuiteConfig cfg;
  cfg.fixture = "adjoint:gl2";
  cfg.n = 2;
  cfg.patch_dim = 7;
  cfg.instances = 10;
  cfg.seed = 42;
  cfg.mode = Mode::Numeric;
  cfg.tolerance = 1e-9;
  cfg.suites = {"bianchi", "cs-descent", "wzw"};
  auto rep = run_suites(cfg);
  double max_resid = 0;
  for (const auto& s : rep.suites) max_resid = std::max(max_resid, s.max_numeric_residual);
  std::string clean_note;
  bool ok = suite_clean(rep, clean_note);
  std::ostringstream os;
  os << "max relative residual " << max_resid;
  if (!ok) os << "; " << clean_note;
  note = os.str();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!within(secs, 600.0, note)) return false;
  return ok;
}

}  // namespace

int main() {
  std::printf("higauge acceptance suite (fixture adjoint:sl2, n=1, d=5, seed 42 unless stated)\n");
  std::printf("--------------------------------------------------------------------------------\n");

  auto t0 = std::chrono::steady_clock::now();
  run_criterion(1, "crossed-module axiom suites + sabotage localization", criterion1);
  run_criterion(2, "pairing suites (sy2, sy4, alpha-swap, invariance) n=1..3", criterion2);
  run_criterion(3, "2-Bianchi residuals on 100 seeded connections", criterion3);
  run_criterion(4, "curvature covariance + gauge composition on 50 pairs", criterion4);
  run_criterion(5, "CS descent on 50 seeds + worked Q4 and dQ4", criterion5);
  run_criterion(6, "higher Chern-Weil residual on 25 seeded pairs", criterion6);
  run_criterion(7, "beta chain for n = 1..4", criterion7);
  run_criterion(8, "higher WZW vanishing on 50 seeded gauge data", criterion8);
  run_criterion(9, "descent relation (tr1) on 25 seeded pairs", criterion9);
  run_criterion(10, "eq1 + gWZW exactness on 25 seeded pairs each", criterion10);
  run_criterion(11, "numeric spot-check n=2, d=7 (bianchi, cs-descent, wzw)", criterion11);

  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  int failed = 0;
  for (const auto& c : results)
    if (!c.pass) ++failed;
  std::printf("--------------------------------------------------------------------------------\n");
  std::printf("%d/%zu criteria passed in %.1fs\n", static_cast<int>(results.size()) - failed,
              results.size(), total);
  if (failed) {
    std::printf(
        "failing criteria assert the identical vanishing of the pure-gauge WZW term;\n"
        "exact computation shows that term is exact but nonzero for generic gauge data\n"
        "(it equals (-1)^n n!n!/(2n+1)! d tr((g^-1 V g)^{2n+1})). The checks are kept\n"
        "as stated; see README.md for the analysis and reproduction commands.\n");
  }
  return failed ? 1 : 0;
}
