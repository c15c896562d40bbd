#include <doctest.h>

#include "higauge/generate.hpp"
#include "higauge/homotopy.hpp"

using namespace higauge;

TEST_SUITE_BEGIN("homotopy");

namespace {

const CrossedModulePtr& sl2adj() {
  static CrossedModulePtr xm = builtin_module("adjoint:sl2");
  return xm;
}

TwoConnection random_connection(uint64_t seed) {
  GenCaps caps;
  return gen_connection(sl2adj(), 5, caps, seed);
}

}  // namespace

TEST_CASE("interpolation hits both endpoints exactly") {
  TwoConnection c0 = random_connection(1);
  TwoConnection c1 = random_connection(2);
  auto fam = interpolate(c0, c1);
  CHECK(subst_param(fam.A_t, Poly::kT, Rat(0)) == c0.A);
  CHECK(subst_param(fam.A_t, Poly::kT, Rat(1)) == c1.A);
  CHECK(subst_param(fam.B_t, Poly::kT, Rat(0)) == c0.B);
  CHECK(subst_param(fam.B_t, Poly::kT, Rat(1)) == c1.B);

  auto constant = interpolate(c0, c0);
  CHECK(constant.Theta.is_zero());
  CHECK(constant.Phi.is_zero());
  CHECK_FALSE(depends_on_param(constant.A_t, Poly::kT));
}

TEST_CASE("interpolated family from zero is the scaled family") {
  TwoConnection c1 = random_connection(3);
  auto fam = interpolate(TwoConnection::zero(5, sl2adj()), c1);
  CHECK(fam.A_t == c1.A.scaled(Poly::param_t()));
  CHECK(fam.B_t == c1.B.scaled(Poly::param_t()));
  // F_t = t F + (t^2 - t) A^2, G_t = t G + (t^2 - t) A |> B
  auto cur = family_curvatures(fam);
  auto [F, G] = curvatures(c1);
  Poly t = Poly::param_t();
  Poly t2t = t * t - t;
  CHECK(cur.F_t == F.scaled(t) + wedge_square(c1.A).scaled(t2t));
  CHECK(cur.G_t == G.scaled(t) + act(c1.A, c1.B).scaled(t2t));
}

TEST_CASE("closed family-curvature formulas match direct computation") {
  for (uint64_t i = 0; i < 10; ++i) {
    auto fam = interpolate(random_connection(derive_seed(10, i)),
                           random_connection(derive_seed(11, i)));
    auto [rF, rG] = family_curvature_residuals(fam);
    CHECK(rF.is_zero());
    CHECK(rG.is_zero());
  }
}

TEST_CASE("constant family has constant curvatures") {
  TwoConnection c = random_connection(4);
  auto fam = interpolate(c, c);
  auto cur = family_curvatures(fam);
  auto [F, G] = curvatures(c);
  CHECK(cur.F_t == F);
  CHECK(cur.G_t == G);
}

TEST_CASE("l_t annihilates the connection generators") {
  Pairing p = symmetrized_trace_pairing(sl2adj(), 1);
  auto fam = interpolate(random_connection(5), random_connection(6));
  auto env = GeneratorEnv::from_family(fam, p);
  CHECK(eval_lt(CSExpr::genA(), env).is_zero());
  CHECK(eval_lt(CSExpr::genB(), env).is_zero());
  CHECK(eval_lt(CSExpr::genF(), env) == env.Theta);
  CHECK(eval_lt(CSExpr::genG(), env) == env.Phi);
}

TEST_CASE("l_t of the curvature polynomial is the transgression integrand") {
  // n=2 runs on gl2: the degree-2 trace pairing on sl2 is identically zero.
  for (int n : {1, 2}) {
    auto xm = (n == 1) ? sl2adj() : builtin_module("adjoint:gl2");
    Pairing p = symmetrized_trace_pairing(xm, n);
    GenCaps caps;
    auto fam = interpolate(gen_connection(xm, 5, caps, derive_seed(20, n)),
                           gen_connection(xm, 5, caps, derive_seed(21, n)));
    auto env = GeneratorEnv::from_family(fam, p);
    PolyForm lt = eval_lt(curvature_polynomial(n), env);
    // n <Theta F^{n-1}, G> + <F^n, Phi>
    std::vector<PolyForm> slots{env.Theta};
    for (int i = 0; i < n - 1; ++i) slots.push_back(env.F);
    PolyForm expected = pair_forms(p, slots, env.G).scaled(Rat(n));
    std::vector<PolyForm> fslots(n, env.F);
    expected = expected + pair_forms(p, fslots, env.Phi);
    CHECK((lt - expected).is_zero());
  }
}

TEST_CASE("l_t of the scaled fake curvature keeps the s weight") {
  Pairing p = symmetrized_trace_pairing(sl2adj(), 1);
  auto fam = interpolate(random_connection(7), random_connection(8));
  auto env = GeneratorEnv::from_family(fam, p);
  Poly s = Poly::param_s();
  auto Fs = CSExpr::sum(
      {CSExpr::scale(s, CSExpr::genF()),
       CSExpr::scale((s * s - s).scaled(Rat(1, 2)), CSExpr::bracket(CSExpr::genA(), CSExpr::genA()))});
  CHECK(eval_lt(Fs, env) == env.Theta.scaled(s));
}

TEST_CASE("symbolic d agrees with the exterior derivative of the evaluation") {
  Pairing p = symmetrized_trace_pairing(sl2adj(), 1);
  auto fam = interpolate(random_connection(9), random_connection(10));
  auto env = GeneratorEnv::from_family(fam, p);
  for (const auto& e :
       {curvature_polynomial(1), cs_integrand(1),
        CSExpr::pair({CSExpr::genA()}, CSExpr::genG()),
        CSExpr::pair({CSExpr::genF()}, CSExpr::act(CSExpr::genA(), CSExpr::genB()))}) {
    CHECK((eval(symbolic_d(e), env) - d(eval(e, env))).is_zero());
  }
}

TEST_CASE("closedness of the curvature polynomial") {
  for (int n : {1, 2}) {
    auto xm = (n == 1) ? sl2adj() : builtin_module("adjoint:gl2");
    Pairing p = symmetrized_trace_pairing(xm, n);
    GenCaps caps;
    auto fam = interpolate(gen_connection(xm, 5, caps, derive_seed(30, n)),
                           gen_connection(xm, 5, caps, derive_seed(31, n)));
    auto env = GeneratorEnv::from_family(fam, p);
    CHECK(eval(symbolic_d(curvature_polynomial(n)), env).is_zero());
    CHECK(d(eval(curvature_polynomial(n), env)).is_zero());
  }
}

TEST_CASE("Cartan homotopy formula on expressions") {
  // S(1) - S(0) = k01(dS) + d(k01 S), checked for the curvature polynomial and
  // for mixed expressions with odd-degree pairing slots. Degree-2 pairings run
  // on gl2 where they are nonzero.
  auto gl2adj = builtin_module("adjoint:gl2");
  Pairing p1 = symmetrized_trace_pairing(sl2adj(), 1);
  Pairing p2 = symmetrized_trace_pairing(gl2adj, 2);
  GenCaps caps;
  for (uint64_t i = 0; i < 6; ++i) {
    auto fam = interpolate(random_connection(derive_seed(40, i)),
                           random_connection(derive_seed(41, i)));
    auto fam2 = interpolate(gen_connection(gl2adj, 5, caps, derive_seed(42, i)),
                            gen_connection(gl2adj, 5, caps, derive_seed(43, i)));
    auto run = [&](const HomotopyFamily& f, const CSExprPtr& S, const Pairing& p) {
      auto env = GeneratorEnv::from_family(f, p);
      PolyForm lhs = subst_param(eval(S, env), Poly::kT, Rat(1)) -
                     subst_param(eval(S, env), Poly::kT, Rat(0));
      PolyForm rhs = k01(symbolic_d(S), env) + d(k01(S, env));
      CHECK((lhs - rhs).is_zero());
    };
    run(fam, curvature_polynomial(1), p1);
    run(fam, CSExpr::pair({CSExpr::genA()}, CSExpr::genG()), p1);
    run(fam2, CSExpr::pair({CSExpr::genA(), CSExpr::genF()}, CSExpr::genG()), p2);
    if (i < 2) run(fam2, curvature_polynomial(2), p2);
  }
}

TEST_CASE("a second application of the homotopy derivation cancels (dt^2 = 0)") {
  // l_t P = <Theta, G_t> + <F_t, Phi> for n = 1, with Theta and Phi carrying
  // the stripped dt. Differentiating once more hits the surviving generator in
  // each term; the images are both <Theta, Phi>, but the first enters with the
  // prefix sign of the odd dt-carrying slot. Their sum is the coefficient of
  // dt^2 and must vanish identically.
  Pairing p = symmetrized_trace_pairing(sl2adj(), 1);
  TwoConnection c1 = TwoConnection::zero(5, sl2adj());
  c1.A.accumulate(1u << 0, 1, Poly::var(1));           // x2 dx1 E
  c1.B.accumulate((1u << 2) | (1u << 3), 2, Poly::var(4));  // x5 dx3^dx4 F
  auto fam = interpolate(TwoConnection::zero(5, sl2adj()), c1);
  auto env = GeneratorEnv::from_family(fam, p);
  CHECK_FALSE(eval_lt(curvature_polynomial(1), env).is_zero());
  std::vector<PolyForm> slot{env.Theta};
  PolyForm from_first = -pair_forms(p, slot, env.Phi);  // prefix degree 1 (odd)
  PolyForm from_second = pair_forms(p, slot, env.Phi);  // prefix degree 0
  CHECK((from_first + from_second).is_zero());
}

TEST_SUITE_END();
