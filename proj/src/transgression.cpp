#include "higauge/transgression.hpp"

namespace higauge {

namespace {

// F_s = s F + (s^2 - s) A^2 and G_s = s G + (s^2 - s) A |> B for given
// (A, B, F, G); used by both the CS form and the WZW evaluation.
struct ScaledFamily {
  PolyForm F_s, G_s;
};

ScaledFamily scaled_family(const PolyForm& A, const PolyForm& B, const PolyForm& F,
                           const PolyForm& G) {
  Poly s = Poly::param_s();
  Poly s2s = s * s - s;
  ScaledFamily out;
  out.F_s = F.scaled(s) + wedge_square(A).scaled(s2s);
  out.G_s = G.scaled(s) + act(A, B).scaled(s2s);
  return out;
}

PolyForm cs_integral(const PolyForm& A, const PolyForm& B, const PolyForm& F, const PolyForm& G,
                     const Pairing& p) {
  int n = p.n();
  auto fam = scaled_family(A, B, F, G);
  std::vector<PolyForm> slots{A};
  for (int i = 0; i < n - 1; ++i) slots.push_back(fam.F_s);
  PolyForm first = pair_forms(p, slots, fam.G_s).scaled(Rat(n));
  std::vector<PolyForm> second_slots(n, fam.F_s);
  PolyForm second = pair_forms(p, second_slots, B);
  return integrate_param(first + second, Poly::kS);
}

}  // namespace

PolyForm cs_form(const TwoConnection& c, const Pairing& p) {
  c.check();
  auto [F, G] = curvatures(c);
  return cs_integral(c.A, c.B, F, G, p);
}

PolyForm transgression_form(const TwoConnection& c0, const TwoConnection& c1, const Pairing& p) {
  auto fam = interpolate(c0, c1);
  auto cur = family_curvatures(fam);
  int n = p.n();
  std::vector<PolyForm> slots{fam.Theta};
  for (int i = 0; i < n - 1; ++i) slots.push_back(cur.F_t);
  PolyForm first = pair_forms(p, slots, cur.G_t).scaled(Rat(n));
  std::vector<PolyForm> second_slots(n, cur.F_t);
  PolyForm second = pair_forms(p, second_slots, fam.Phi);
  return integrate_param(first + second, Poly::kT);
}

PolyForm cs_descent_residual(const TwoConnection& c, const Pairing& p) {
  auto [F, G] = curvatures(c);
  std::vector<PolyForm> slots(p.n(), F);
  return d(cs_form(c, p)) - pair_forms(p, slots, G);
}

PolyForm chern_weil_residual(const TwoConnection& c0, const TwoConnection& c1, const Pairing& p) {
  auto [F0, G0] = curvatures(c0);
  auto [F1, G1] = curvatures(c1);
  std::vector<PolyForm> s0(p.n(), F0), s1(p.n(), F1);
  PolyForm lhs = pair_forms(p, s1, G1) - pair_forms(p, s0, G0);
  return lhs - d(transgression_form(c0, c1, p));
}

VWFields vw_fields(const GaugeData& gd) {
  const auto& xm = gd.phi.module();
  int dim = gd.phi.patch_dim();
  VWFields out;
  out.F_phi = d(gd.phi) + wedge_square(gd.phi);
  PolyForm alpha_phi_conj = apply_linear(ad_on_g(*xm, gd.g), alpha_push(gd.phi));
  out.V = maurer_right_form(xm, gd.g, dim) + alpha_phi_conj;
  PolyForm g_phi = apply_linear(act_on_h(*xm, gd.g), gd.phi);
  PolyForm dgg = maurer_right_form(xm, gd.g, dim);
  out.W = apply_linear(act_on_h(*xm, gd.g), out.F_phi) + act(dgg, g_phi);
  return out;
}

WzwEvaluation wzw_term(const GaugeData& gd, const Pairing& p) {
  const auto& xm = gd.phi.module();
  auto vw = vw_fields(gd);
  WzwEvaluation out;
  out.flat_A = apply_linear(adinv_on_g(*xm, gd.g), vw.V);
  out.flat_B = apply_linear(actinv_on_h(*xm, gd.g), vw.W);
  int d = gd.phi.patch_dim();
  int n = p.n();
  PolyForm zeroF = PolyForm::zero(d, 2, VKind::AlgG, xm);
  PolyForm zeroG = PolyForm::zero(d, 3, VKind::AlgH, xm);
  out.form = cs_integral(out.flat_A, out.flat_B, zeroF, zeroG, p);

  // Reduction-chain intermediates, in terms of the untransformed V and W.
  PolyForm V2 = wedge_square(vw.V);
  std::vector<PolyForm> lhs_slots{vw.V};
  for (int i = 0; i < n - 1; ++i) lhs_slots.push_back(V2);
  out.lhs_identity = pair_forms(p, lhs_slots, act(vw.V, vw.W));
  std::vector<PolyForm> v2_slots(n, V2);
  out.contraction = pair_forms(p, v2_slots, vw.W);
  out.rhs_identity = out.contraction.scaled(Rat(2));
  out.closed_form = out.contraction.scaled(wzw_closed_form_coefficient(n).closed_form);
  return out;
}

WzwCoefficients wzw_closed_form_coefficient(int n) {
  if (n < 1) throw Error(ErrorKind::Structural, "n must be positive");
  Rat sign = (n % 2) ? Rat(-1) : Rat(1);
  Rat nf = factorial(static_cast<unsigned>(n));
  WzwCoefficients out;
  out.beta = sign * nf * nf / factorial(static_cast<unsigned>(2 * n + 1));
  out.closed_form = sign * nf * nf / factorial(static_cast<unsigned>(2 * n));
  if (Rat(2 * n + 1) * out.beta != out.closed_form)
    throw Error(ErrorKind::Structural, "beta chain inconsistency");
  // Cross-check the Beta value against exact integration of (t^2 - t)^n.
  Poly t = Poly::param_t();
  Poly integrand = Poly::constant(Rat(1));
  Poly tt = t * t - t;
  for (int i = 0; i < n; ++i) integrand *= tt;
  if (integrand.integrate01(Poly::kT).constant_value() != out.beta)
    throw Error(ErrorKind::Structural, "beta integral mismatch");
  return out;
}

GeneratorEnv gauge_family_env(const TwoConnection& c, const GaugeData& gd, const Pairing& p) {
  c.check();
  const auto& xm = c.module();
  int dim = c.patch_dim();
  Poly t = Poly::param_t();
  PolyForm Ag_t = apply_linear(adinv_on_g(*xm, gd.g), c.A).scaled(t) +
                  maurer_left_form(xm, gd.g, dim);
  PolyForm Fphi = d(gd.phi) + wedge_square(gd.phi);
  GeneratorEnv env;
  env.A = Ag_t + alpha_push(gd.phi);
  env.B = apply_linear(actinv_on_h(*xm, gd.g), c.B).scaled(t) + Fphi + act(Ag_t, gd.phi);
  auto cur = curvatures({env.A, env.B});
  env.F = cur.F;
  env.G = cur.G;
  env.Theta = partial_param(env.A, Poly::kT);
  env.Phi = partial_param(env.B, Poly::kT);
  env.xm = xm;
  env.pairing = &p;
  return env;
}

PolyForm alpha_form(const TwoConnection& c, const GaugeData& gd, const Pairing& p) {
  auto env = gauge_family_env(c, gd, p);
  PolyForm stripped = eval_lt(cs_integrand(p.n()), env);
  return integrate_param(integrate_param(stripped, Poly::kT), Poly::kS);
}

PolyForm descent_residual(const TwoConnection& c, const GaugeData& gd, const Pairing& p) {
  PolyForm lhs = cs_form(gauge_transform(c, gd), p) - cs_form(c, p);
  return lhs - wzw_term(gd, p).form - d(alpha_form(c, gd, p));
}

PolyForm b_form(const TwoConnection& c0, const TwoConnection& c1, const Pairing& p) {
  auto fam = interpolate(c0, c1);
  auto cur = family_curvatures(fam);
  int n = p.n();
  Poly s = Poly::param_s();
  Poly s2s = s * s - s;
  // F_st = s F_t + (s^2-s) A_t^2, G_st = s G_t + (s^2-s) A_t |> B_t.
  PolyForm F_st = cur.F_t.scaled(s) + wedge_square(fam.A_t).scaled(s2s);
  PolyForm G_st = cur.G_t.scaled(s) + act(fam.A_t, fam.B_t).scaled(s2s);

  PolyForm acc = PolyForm::scalar_zero(c0.patch_dim(), 2 * n + 1);
  if (n >= 2) {
    std::vector<PolyForm> slots{fam.A_t, fam.Theta};
    for (int i = 0; i < n - 2; ++i) slots.push_back(F_st);
    acc = acc + pair_forms(p, slots, G_st).scaled(Rat(n - 1));
  }
  std::vector<PolyForm> slots2{fam.A_t};
  for (int i = 0; i < n - 1; ++i) slots2.push_back(F_st);
  acc = acc + pair_forms(p, slots2, fam.Phi);
  std::vector<PolyForm> slots3{fam.Theta};
  for (int i = 0; i < n - 1; ++i) slots3.push_back(F_st);
  acc = acc - pair_forms(p, slots3, fam.B_t);

  acc = acc.scaled(s.scaled(Rat(-n)));
  return integrate_param(integrate_param(acc, Poly::kS), Poly::kT);
}

PolyForm b_form_via_k01(const TwoConnection& c0, const TwoConnection& c1, const Pairing& p) {
  auto env = GeneratorEnv::from_family(interpolate(c0, c1), p);
  PolyForm stripped = eval_lt(cs_integrand(p.n()), env);
  return integrate_param(integrate_param(stripped, Poly::kT), Poly::kS);
}

PolyForm eq1_residual(const TwoConnection& c0, const TwoConnection& c1, const Pairing& p) {
  PolyForm q = transgression_form(c0, c1, p);
  return q - cs_form(c1, p) + cs_form(c0, p) + d(b_form(c0, c1, p));
}

PolyForm gwzw_form(const TwoConnection& c, const GaugeData& gd, const Pairing& p) {
  return transgression_form(c, gauge_transform(c, gd), p);
}

PolyForm gwzw_exactness_residual(const TwoConnection& c, const GaugeData& gd, const Pairing& p) {
  PolyForm primitive = alpha_form(c, gd, p) - b_form(c, gauge_transform(c, gd), p);
  return gwzw_form(c, gd, p) - d(primitive);
}

}  // namespace higauge
