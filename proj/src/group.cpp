#include "higauge/group.hpp"

#include <functional>

namespace higauge {

PolyMat nilpotent_exp(const PolyMat& n) {
  if (n.rows() != n.cols()) throw Error(ErrorKind::Structural, "exp: square matrix required");
  int amb = n.rows();
  PolyMat acc = PolyMat::identity(amb);
  PolyMat power = PolyMat::identity(amb);
  Rat fact(1);
  for (int k = 1; k <= amb; ++k) {
    power = power * n;
    if (power.is_zero()) return acc;
    fact *= k;
    acc = acc + power.scaled(Poly::constant(Rat(1) / fact));
  }
  throw Error(ErrorKind::Capability, "matrix is not nilpotent; exponential series does not terminate");
}

GroupMap GroupMap::identity(int ambient) {
  PolyMat id = PolyMat::identity(ambient);
  return GroupMap(Kind::Identity, id, id);
}

GroupMap GroupMap::constant(const RatMat& g) {
  RatMat inv = higauge::inverse(g);  // throws if singular
  bool is_id = g == RatMat::identity(g.rows());
  return GroupMap(is_id ? Kind::Identity : Kind::Constant, to_poly(g), to_poly(inv));
}

GroupMap GroupMap::unipotent(const PolyMat& nilp) {
  PolyMat g = nilpotent_exp(nilp);
  PolyMat ginv = nilpotent_exp(-nilp);
  GroupMap m(Kind::Unipotent, std::move(g), std::move(ginv));
  m.nilp_ = nilp;
  return m;
}

GroupMap GroupMap::from_matrices(PolyMat g, PolyMat ginv) {
  if (!(g * ginv == PolyMat::identity(g.rows())))
    throw Error(ErrorKind::Structural, "g * ginv != identity");
  return GroupMap(Kind::Product, std::move(g), std::move(ginv));
}

const PolyMat& GroupMap::nilpotent() const {
  if (kind_ != Kind::Unipotent) throw Error(ErrorKind::Structural, "not a unipotent element");
  return nilp_;
}

GroupMap GroupMap::compose(const GroupMap& other) const {
  if (is_identity()) return other;
  if (other.is_identity()) return *this;
  return GroupMap(Kind::Product, g_ * other.g_, other.ginv_ * ginv_);
}

GroupMap GroupMap::inverse_element() const {
  GroupMap m(kind_, ginv_, g_);
  if (kind_ == Kind::Unipotent) m.nilp_ = -nilp_;
  return m;
}

bool GroupMap::is_identity() const {
  return kind_ == Kind::Identity;
}

bool GroupMap::is_constant() const {
  if (kind_ == Kind::Identity || kind_ == Kind::Constant) return true;
  for (int i = 0; i < g_.rows(); ++i)
    for (int j = 0; j < g_.cols(); ++j)
      if (!g_(i, j).is_constant()) return false;
  return true;
}

namespace {

PolyForm matrix_one_form(const PolyMat& m, int patch_dim, int var) {
  int n = m.rows();
  PolyForm f = PolyForm::zero_matrix(patch_dim, 1, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) f.accumulate(1u << var, i * n + j, m(i, j));
  return f;
}

PolyMat entrywise_derivative(const PolyMat& m, int var) {
  PolyMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).derivative(var);
  return r;
}

}  // namespace

PolyForm GroupMap::dg_g_inverse(int patch_dim) const {
  PolyForm f = PolyForm::zero_matrix(patch_dim, 1, ambient());
  for (int v = 0; v < patch_dim; ++v) {
    PolyMat dv = entrywise_derivative(g_, v);
    if (dv.is_zero()) continue;
    f = f + matrix_one_form(dv * ginv_, patch_dim, v);
  }
  f.prune();
  return f;
}

PolyForm GroupMap::g_inverse_dg(int patch_dim) const {
  PolyForm f = PolyForm::zero_matrix(patch_dim, 1, ambient());
  for (int v = 0; v < patch_dim; ++v) {
    PolyMat dv = entrywise_derivative(g_, v);
    if (dv.is_zero()) continue;
    f = f + matrix_one_form(ginv_ * dv, patch_dim, v);
  }
  f.prune();
  return f;
}

namespace {

PolyMat conj_coords(const LieAlgebra& alg, const PolyMat& left, const PolyMat& right) {
  int dim = alg.dim();
  PolyMat out(dim, dim);
  for (int i = 0; i < dim; ++i) {
    PolyMat m = left * to_poly(alg.basis_matrix(i)) * right;
    std::vector<Poly> coords;
    try {
      coords = alg.coords_of(m);
    } catch (const Error&) {
      throw Error(ErrorKind::Capability,
                  "group action leaves the span of " + alg.name());
    }
    for (int r = 0; r < dim; ++r) out(r, i) = coords[r];
  }
  return out;
}

}  // namespace

PolyMat ad_on_g(const CrossedModule& xm, const GroupMap& g) {
  if (xm.group_kind == GroupActionKind::None)
    throw Error(ErrorKind::Capability, "module has no supported group action");
  return conj_coords(xm.g, g.matrix(), g.inverse());
}

PolyMat adinv_on_g(const CrossedModule& xm, const GroupMap& g) {
  if (xm.group_kind == GroupActionKind::None)
    throw Error(ErrorKind::Capability, "module has no supported group action");
  return conj_coords(xm.g, g.inverse(), g.matrix());
}

PolyMat act_on_h(const CrossedModule& xm, const GroupMap& g) {
  switch (xm.group_kind) {
    case GroupActionKind::Conjugation:
      return conj_coords(xm.h, g.matrix(), g.inverse());
    case GroupActionKind::DefiningRep:
      if (g.ambient() != xm.h.dim())
        throw Error(ErrorKind::Capability, "defining representation dimension mismatch");
      return g.matrix();
    case GroupActionKind::None:
      throw Error(ErrorKind::Capability, "module has no supported group action");
  }
  throw Error(ErrorKind::Capability, "unreachable");
}

PolyMat actinv_on_h(const CrossedModule& xm, const GroupMap& g) {
  switch (xm.group_kind) {
    case GroupActionKind::Conjugation:
      return conj_coords(xm.h, g.inverse(), g.matrix());
    case GroupActionKind::DefiningRep:
      if (g.ambient() != xm.h.dim())
        throw Error(ErrorKind::Capability, "defining representation dimension mismatch");
      return g.inverse();
    case GroupActionKind::None:
      throw Error(ErrorKind::Capability, "module has no supported group action");
  }
  throw Error(ErrorKind::Capability, "unreachable");
}

namespace {

PolyForm matrix_form_to_g(const CrossedModule& xm, const PolyForm& mform,
                          CrossedModulePtr owner) {
  PolyForm r = PolyForm::zero(mform.patch_dim(), mform.degree(), VKind::AlgG, owner);
  int n = mform.ambient();
  for (const auto& [mask, vals] : mform.terms()) {
    PolyMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = vals[static_cast<size_t>(i) * n + j];
    std::vector<Poly> coords;
    try {
      coords = xm.g.coords_of(m);
    } catch (const Error&) {
      throw Error(ErrorKind::Capability, "Maurer-Cartan form leaves the algebra span");
    }
    for (int i = 0; i < xm.g.dim(); ++i) r.accumulate(mask, i, coords[i]);
  }
  r.prune();
  return r;
}

}  // namespace

PolyForm maurer_left_form(const CrossedModulePtr& xm, const GroupMap& g, int patch_dim) {
  return matrix_form_to_g(*xm, g.g_inverse_dg(patch_dim), xm);
}

PolyForm maurer_right_form(const CrossedModulePtr& xm, const GroupMap& g, int patch_dim) {
  return matrix_form_to_g(*xm, g.dg_g_inverse(patch_dim), xm);
}

ValidationReport validate_pairing_full(const Pairing& p) {
  ValidationReport rep = validate_pairing(p);
  if (!rep.ok()) return rep;
  if (p.module()->group_kind == GroupActionKind::None) return rep;
  // Sampled integrated invariance: one symbolic unipotent element per strictly
  // triangular basis direction, plus a constant invertible sample.
  const LieAlgebra& g = p.module()->g;
  int amb = g.ambient();
  for (int i = 0; i < g.dim(); ++i) {
    const RatMat& b = g.basis_matrix(i);
    bool upper = true, lower = true;
    for (int r = 0; r < amb; ++r)
      for (int c = 0; c < amb; ++c) {
        if (b(r, c) == 0) continue;
        if (r >= c) upper = false;
        if (r <= c) lower = false;
      }
    if (!upper && !lower) continue;
    PolyMat n(amb, amb);
    for (int r = 0; r < amb; ++r)
      for (int c = 0; c < amb; ++c)
        if (b(r, c) != 0) n(r, c) = Poly::var(0).scaled(b(r, c));
    auto inv = validate_pairing_invariance(p, GroupMap::unipotent(n));
    rep.items.insert(rep.items.end(), inv.items.begin(), inv.items.end());
  }
  RatMat sample = RatMat::identity(amb);
  sample(0, 0) = Rat(2);
  sample(amb - 1, amb - 1) = Rat(1, 2);
  if (amb >= 2) sample(0, 1) = Rat(1);
  auto inv = validate_pairing_invariance(p, GroupMap::constant(sample));
  rep.items.insert(rep.items.end(), inv.items.begin(), inv.items.end());
  return rep;
}

ValidationReport validate_pairing_invariance(const Pairing& p, const GroupMap& g) {
  ValidationReport rep;
  const auto& xm = *p.module();
  int n = p.n(), dg = xm.g.dim(), dh = xm.h.dim();
  PolyMat ad = ad_on_g(xm, g);
  PolyMat hact = act_on_h(xm, g);

  std::vector<int> idx(n, 0);
  std::vector<int> src(n, 0);
  for (;;) {
    for (int b = 0; b < dh; ++b) {
      Poly lhs;
      // Sum over source indices of the conjugated arguments.
      std::function<void(int, Poly)> rec = [&](int slot, Poly weight) {
        if (weight.is_zero()) return;
        if (slot == n) {
          for (int bp = 0; bp < dh; ++bp) {
            if (hact(bp, b).is_zero()) continue;
            const Rat& pc = p.coeff(src, bp);
            if (pc == 0) continue;
            lhs += (weight * hact(bp, b)).scaled(pc);
          }
          return;
        }
        for (int ap = 0; ap < dg; ++ap) {
          if (ad(ap, idx[slot]).is_zero()) continue;
          src[slot] = ap;
          rec(slot + 1, weight * ad(ap, idx[slot]));
        }
      };
      rec(0, Poly::constant(Rat(1)));
      if (!(lhs - Poly::constant(p.coeff(idx, b))).is_zero()) {
        std::vector<int> where = idx;
        where.push_back(b);
        rep.add("integrated-invariance", where);
        return rep;
      }
    }
    int pos = n - 1;
    while (pos >= 0 && ++idx[pos] == dg) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return rep;
}

}  // namespace higauge
