#pragma once

#include "higauge/homotopy.hpp"

namespace higauge {

// Chern-Simons (2n+2)-form of a single 2-connection:
//   Q = n int_0^1 ds <A ^ F_s^{n-1}, G_s> + int_0^1 ds <F_s^n, B>,
// F_s = s F + (s^2 - s) A^2, G_s = s G + (s^2 - s) A |> B.
PolyForm cs_form(const TwoConnection& c, const Pairing& p);

// Transgression (2n+2)-form between two 2-connections along the linear
// interpolation; reduces to cs_form when c0 = 0.
PolyForm transgression_form(const TwoConnection& c0, const TwoConnection& c1, const Pairing& p);

// d(cs_form) - <F^n, G>; identically zero (local Chern-Weil descent).
PolyForm cs_descent_residual(const TwoConnection& c, const Pairing& p);

// <F1^n, G1> - <F0^n, G0> - d(transgression); identically zero.
PolyForm chern_weil_residual(const TwoConnection& c0, const TwoConnection& c1, const Pairing& p);

// The pure-gauge fields V = dg g^-1 + g alpha(phi) g^-1 (g-valued 1-form) and
// W = g |> F(phi) + (dg g^-1) |> (g |> phi) (h-valued 2-form), plus
// F(phi) = d phi + phi^2.
struct VWFields {
  PolyForm V;
  PolyForm W;
  PolyForm F_phi;
};
VWFields vw_fields(const GaugeData& gd);

// The boundary functional Q(g^-1 V g, g^-1 |> W, 0, 0) together with the
// intermediate quantities needed to check each reduction step separately.
struct WzwEvaluation {
  PolyForm form;              // the (2n+2)-form itself
  PolyForm flat_A;            // g^-1 V g
  PolyForm flat_B;            // g^-1 |> W
  PolyForm lhs_identity;      // < V (V^2)^{n-1}, V |> W >
  PolyForm rhs_identity;      // 2 < (V^2)^n, W >
  PolyForm contraction;       // < (V^2)^n, W >
  PolyForm closed_form;       // (-1)^n n! n! / (2n)! * < (V^2)^n, W >
};
WzwEvaluation wzw_term(const GaugeData& gd, const Pairing& p);

// Beta-integral bookkeeping: integral of (t^2-t)^n over [0,1] equals
// (-1)^n n!n!/(2n+1)!; multiplying by (2n+1) gives the closed-form factor.
struct WzwCoefficients {
  Rat beta;         // (-1)^n n! n! / (2n+1)!
  Rat closed_form;  // (-1)^n n! n! / (2n)!
};
WzwCoefficients wzw_closed_form_coefficient(int n);

// The homotopy of gauge-transformed fields A_t^{g,phi}, B_t^{g,phi} with its
// generator environment (curvatures computed from the family itself).
GeneratorEnv gauge_family_env(const TwoConnection& c, const GaugeData& gd, const Pairing& p);

// alpha_{2n+1} = k01 of the CS integrand along the gauge family, with the
// s-integral carried out exactly afterwards.
PolyForm alpha_form(const TwoConnection& c, const GaugeData& gd, const Pairing& p);

// cs(c^{g,phi}) - cs(c) - wzw(gd) - d(alpha); identically zero.
PolyForm descent_residual(const TwoConnection& c, const GaugeData& gd, const Pairing& p);

// B_{2n+1} between two connections, by the explicit double-integral formula
//   -int int dt ds n s { (n-1) <A_t Theta F_st^{n-2}, G_st>
//                        + <A_t F_st^{n-1}, Phi> - <Theta F_st^{n-1}, B_t> }.
PolyForm b_form(const TwoConnection& c0, const TwoConnection& c1, const Pairing& p);

// Same quantity through k01 of the CS integrand; the two paths agree exactly.
PolyForm b_form_via_k01(const TwoConnection& c0, const TwoConnection& c1, const Pairing& p);

// transgression - cs(c1) + cs(c0) + d(b_form); identically zero.
PolyForm eq1_residual(const TwoConnection& c0, const TwoConnection& c1, const Pairing& p);

// Transgression between c and its gauge transform.
PolyForm gwzw_form(const TwoConnection& c, const GaugeData& gd, const Pairing& p);

// gwzw - d(alpha - b_form(c, c^{g,phi})). Equals the WZW term exactly, so it
// vanishes precisely when the WZW term does.
PolyForm gwzw_exactness_residual(const TwoConnection& c, const GaugeData& gd, const Pairing& p);

}  // namespace higauge
