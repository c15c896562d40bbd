#include "higauge/gauge.hpp"

namespace higauge {

TwoConnection TwoConnection::zero(int patch_dim, const CrossedModulePtr& xm) {
  return {PolyForm::zero(patch_dim, 1, VKind::AlgG, xm),
          PolyForm::zero(patch_dim, 2, VKind::AlgH, xm)};
}

void TwoConnection::check() const {
  if (A.kind() != VKind::AlgG || A.degree() != 1)
    throw Error(ErrorKind::Type, "connection A must be a g-valued 1-form");
  if (B.kind() != VKind::AlgH || B.degree() != 2)
    throw Error(ErrorKind::Type, "connection B must be an h-valued 2-form");
  if (A.patch_dim() != B.patch_dim() || A.module() != B.module())
    throw Error(ErrorKind::Type, "connection components live on different patches");
}

GaugeData GaugeData::trivial(int patch_dim, const CrossedModulePtr& xm) {
  return {GroupMap::identity(xm->g.ambient()),
          PolyForm::zero(patch_dim, 1, VKind::AlgH, xm)};
}

CurvaturePair curvatures(const TwoConnection& c) {
  c.check();
  PolyForm F = d(c.A) + wedge_square(c.A) - alpha_push(c.B);
  PolyForm G = d(c.B) + act(c.A, c.B);
  return {std::move(F), std::move(G)};
}

std::pair<PolyForm, PolyForm> bianchi_residuals(const TwoConnection& c) {
  auto [F, G] = curvatures(c);
  PolyForm r1 = d(F) + bracket(c.A, F) + alpha_push(G);
  PolyForm r2 = d(G) + act(c.A, G) - act(F, c.B);
  return {std::move(r1), std::move(r2)};
}

TwoConnection gauge_transform(const TwoConnection& c, const GaugeData& gd) {
  c.check();
  const auto& xm = c.module();
  int dim = c.patch_dim();
  PolyForm A1 = apply_linear(adinv_on_g(*xm, gd.g), c.A) + maurer_left_form(xm, gd.g, dim) +
                alpha_push(gd.phi);
  PolyForm B1 = apply_linear(actinv_on_h(*xm, gd.g), c.B) + d(gd.phi) + act(A1, gd.phi) -
                wedge_square(gd.phi);
  return {std::move(A1), std::move(B1)};
}

TwoConnection gauge_transform_variant(const TwoConnection& c, const GaugeData& gd) {
  c.check();
  const auto& xm = c.module();
  int dim = c.patch_dim();
  PolyForm Ag = apply_linear(adinv_on_g(*xm, gd.g), c.A) + maurer_left_form(xm, gd.g, dim);
  PolyForm A1 = Ag + alpha_push(gd.phi);
  PolyForm Fphi = d(gd.phi) + wedge_square(gd.phi);
  PolyForm B1 = apply_linear(actinv_on_h(*xm, gd.g), c.B) + Fphi + act(Ag, gd.phi);
  return {std::move(A1), std::move(B1)};
}

GaugeData gauge_compose(const GaugeData& gd1, const GaugeData& gd2) {
  if (gd1.phi.module() != gd2.phi.module())
    throw Error(ErrorKind::Type, "gauge data over different modules");
  const auto& xm = gd1.phi.module();
  GroupMap g12 = gd1.g.compose(gd2.g);
  PolyForm phi12 = apply_linear(actinv_on_h(*xm, gd2.g), gd1.phi) + gd2.phi;
  return {std::move(g12), std::move(phi12)};
}

GaugeData gauge_inverse(const GaugeData& gd) {
  const auto& xm = gd.phi.module();
  GroupMap ginv = gd.g.inverse_element();
  PolyForm phi_inv = -apply_linear(act_on_h(*xm, gd.g), gd.phi);
  return {std::move(ginv), std::move(phi_inv)};
}

std::pair<PolyForm, PolyForm> curvature_covariance_residuals(const TwoConnection& c,
                                                             const GaugeData& gd) {
  const auto& xm = c.module();
  auto [F, G] = curvatures(c);
  auto [F1, G1] = curvatures(gauge_transform(c, gd));
  PolyForm rF = F1 - apply_linear(adinv_on_g(*xm, gd.g), F);
  PolyForm rG = G1 - (apply_linear(actinv_on_h(*xm, gd.g), G) + act(F1, gd.phi));
  return {std::move(rF), std::move(rG)};
}

}  // namespace higauge
