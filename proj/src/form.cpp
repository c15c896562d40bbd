#include "higauge/form.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <sstream>

namespace higauge {

PolyForm PolyForm::zero(int patch_dim, int degree, VKind kind, CrossedModulePtr xm) {
  PolyForm f;
  f.d_ = patch_dim;
  f.k_ = degree;
  f.kind_ = kind;
  f.xm_ = std::move(xm);
  switch (kind) {
    case VKind::Scalar: f.vdim_ = 1; break;
    case VKind::AlgG: f.vdim_ = f.xm_->g.dim(); break;
    case VKind::AlgH: f.vdim_ = f.xm_->h.dim(); break;
    case VKind::Matrix: throw Error(ErrorKind::Type, "use zero_matrix for matrix-valued forms");
  }
  return f;
}

PolyForm PolyForm::zero_matrix(int patch_dim, int degree, int ambient) {
  PolyForm f;
  f.d_ = patch_dim;
  f.k_ = degree;
  f.kind_ = VKind::Matrix;
  f.ambient_ = ambient;
  f.vdim_ = ambient * ambient;
  return f;
}

PolyForm PolyForm::scalar_zero(int patch_dim, int degree) {
  PolyForm f;
  f.d_ = patch_dim;
  f.k_ = degree;
  f.kind_ = VKind::Scalar;
  f.vdim_ = 1;
  return f;
}

bool PolyForm::is_zero() const {
  for (const auto& [m, v] : terms_)
    for (const auto& p : v)
      if (!p.is_zero()) return false;
  return true;
}

bool PolyForm::operator==(const PolyForm& o) const {
  if (d_ != o.d_ || k_ != o.k_ || kind_ != o.kind_ || vdim_ != o.vdim_) return false;
  return (*this - o).is_zero();
}

void PolyForm::accumulate(uint32_t mask, int component, const Poly& c) {
  if (c.is_zero()) return;
  if (std::popcount(mask) != k_) throw Error(ErrorKind::Structural, "multi-index arity mismatch");
  auto it = terms_.find(mask);
  if (it == terms_.end()) it = terms_.emplace(mask, std::vector<Poly>(vdim_)).first;
  it->second[component] += c;
}

const Poly& PolyForm::component(uint32_t mask, int component) const {
  static const Poly kZero;
  auto it = terms_.find(mask);
  if (it == terms_.end()) return kZero;
  return it->second[component];
}

void PolyForm::check_compatible(const PolyForm& o) const {
  if (d_ != o.d_ || k_ != o.k_ || kind_ != o.kind_ || vdim_ != o.vdim_)
    throw Error(ErrorKind::Type, "form shape mismatch");
}

PolyForm PolyForm::operator+(const PolyForm& o) const {
  check_compatible(o);
  PolyForm r = *this;
  for (const auto& [m, v] : o.terms_)
    for (int i = 0; i < vdim_; ++i) r.accumulate(m, i, v[i]);
  r.prune();
  return r;
}

PolyForm PolyForm::operator-(const PolyForm& o) const { return *this + (-o); }

PolyForm PolyForm::operator-() const {
  PolyForm r = *this;
  for (auto& [m, v] : r.terms_)
    for (auto& p : v) p = -p;
  return r;
}

PolyForm PolyForm::scaled(const Rat& c) const {
  PolyForm r = *this;
  if (c == 0) { r.terms_.clear(); return r; }
  for (auto& [m, v] : r.terms_)
    for (auto& p : v) p = p.scaled(c);
  return r;
}

PolyForm PolyForm::scaled(const Poly& c) const {
  PolyForm r = *this;
  if (c.is_zero()) { r.terms_.clear(); return r; }
  for (auto& [m, v] : r.terms_)
    for (auto& p : v) p = p * c;
  return r;
}

void PolyForm::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    bool zero = true;
    for (const auto& p : it->second)
      if (!p.is_zero()) { zero = false; break; }
    it = zero ? terms_.erase(it) : std::next(it);
  }
}

std::string mask_str(uint32_t mask) {
  if (!mask) return "1";
  std::string s;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) {
      if (!s.empty()) s += "^";
      s += "dx" + std::to_string(i + 1);
    }
  return s;
}

std::string PolyForm::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, v] : terms_) {
    for (int i = 0; i < vdim_; ++i) {
      if (v[i].is_zero()) continue;
      if (!first) os << "  +  ";
      first = false;
      os << "(" << v[i].str() << ") " << mask_str(m);
      if (kind_ == VKind::AlgG) os << " " << xm_->g.basis_name(i);
      else if (kind_ == VKind::AlgH) os << " " << xm_->h.basis_name(i);
      else if (kind_ == VKind::Matrix)
        os << " e" << (i / ambient_ + 1) << (i % ambient_ + 1);
    }
  }
  return os.str();
}

int wedge_sign(uint32_t a, uint32_t b) {
  if (a & b) return 0;
  // Count inversions: bits of a strictly above each bit of b.
  int sign = 1;
  for (uint32_t bb = b; bb;) {
    int bit = std::countr_zero(bb);
    bb &= bb - 1;
    uint32_t above = a >> (bit + 1);
    if (std::popcount(above) & 1) sign = -sign;
  }
  return sign;
}

PolyForm d(const PolyForm& w) {
  PolyForm r;
  if (w.kind() == VKind::Matrix) r = PolyForm::zero_matrix(w.patch_dim(), w.degree() + 1, w.ambient());
  else r = PolyForm::zero(w.patch_dim(), w.degree() + 1, w.kind(), w.module());
  if (w.degree() >= w.patch_dim()) return r;
  for (const auto& [mask, vals] : w.terms()) {
    for (int v = 0; v < w.patch_dim(); ++v) {
      uint32_t vb = 1u << v;
      if (mask & vb) continue;
      int sg = wedge_sign(vb, mask);
      for (int i = 0; i < w.value_dim(); ++i) {
        Poly dp = vals[i].derivative(v);
        if (dp.is_zero()) continue;
        r.accumulate(mask | vb, i, sg < 0 ? -dp : dp);
      }
    }
  }
  r.prune();
  return r;
}

namespace {

// Realizes a value vector as an ambient matrix of polynomials.
std::vector<Poly> coords_to_matrix(const PolyForm& w, const std::vector<Poly>& vals, int& amb) {
  const auto& xm = w.module();
  const LieAlgebra& alg = (w.kind() == VKind::AlgG) ? xm->g : xm->h;
  amb = alg.ambient();
  std::vector<Poly> m(static_cast<size_t>(amb) * amb);
  for (int i = 0; i < alg.dim(); ++i) {
    if (vals[i].is_zero()) continue;
    for (int r = 0; r < amb; ++r)
      for (int c = 0; c < amb; ++c) {
        const Rat& e = alg.basis_matrix(i)(r, c);
        if (e != 0) m[static_cast<size_t>(r) * amb + c] += vals[i].scaled(e);
      }
  }
  return m;
}

}  // namespace

PolyForm to_matrix_form(const PolyForm& w) {
  if (w.kind() == VKind::Matrix) return w;
  if (w.kind() == VKind::Scalar) throw Error(ErrorKind::Type, "scalar form has no matrix realization");
  int amb = 0;
  PolyForm r;
  bool first = true;
  for (const auto& [mask, vals] : w.terms()) {
    auto m = coords_to_matrix(w, vals, amb);
    if (first) {
      r = PolyForm::zero_matrix(w.patch_dim(), w.degree(), amb);
      first = false;
    }
    for (size_t i = 0; i < m.size(); ++i) r.accumulate(mask, static_cast<int>(i), m[i]);
  }
  if (first) {
    const LieAlgebra& alg = (w.kind() == VKind::AlgG) ? w.module()->g : w.module()->h;
    r = PolyForm::zero_matrix(w.patch_dim(), w.degree(), alg.ambient());
  }
  r.prune();
  return r;
}

PolyForm matrix_to_algebra(const PolyForm& w, const CrossedModulePtr& xm, VKind target) {
  if (w.kind() != VKind::Matrix) throw Error(ErrorKind::Type, "matrix-valued form expected");
  if (target != VKind::AlgG && target != VKind::AlgH)
    throw Error(ErrorKind::Type, "target must be an algebra value space");
  const LieAlgebra& alg = (target == VKind::AlgG) ? xm->g : xm->h;
  if (alg.ambient() != w.ambient())
    throw Error(ErrorKind::Type, "ambient size mismatch in matrix_to_algebra");
  PolyForm r = PolyForm::zero(w.patch_dim(), w.degree(), target, xm);
  int n = w.ambient();
  for (const auto& [mask, vals] : w.terms()) {
    PolyMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = vals[static_cast<size_t>(i) * n + j];
    auto coords = alg.coords_of(m);
    for (int i = 0; i < alg.dim(); ++i) r.accumulate(mask, i, coords[i]);
  }
  r.prune();
  return r;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.patch_dim() != b.patch_dim()) throw Error(ErrorKind::Type, "patch dimension mismatch");
  int d = a.patch_dim(), k = a.degree() + b.degree();

  if (a.kind() == VKind::Scalar || b.kind() == VKind::Scalar) {
    const PolyForm& sc = (a.kind() == VKind::Scalar) ? a : b;
    const PolyForm& other = (a.kind() == VKind::Scalar) ? b : a;
    bool scalar_first = (a.kind() == VKind::Scalar);
    PolyForm r;
    if (other.kind() == VKind::Matrix) r = PolyForm::zero_matrix(d, k, other.ambient());
    else if (other.kind() == VKind::Scalar) r = PolyForm::scalar_zero(d, k);
    else r = PolyForm::zero(d, k, other.kind(), other.module());
    for (const auto& [ma, va] : sc.terms())
      for (const auto& [mb, vb] : other.terms()) {
        int sg = scalar_first ? wedge_sign(ma, mb) : wedge_sign(mb, ma);
        if (!sg) continue;
        Poly c = sg < 0 ? -va[0] : va[0];
        for (int i = 0; i < other.value_dim(); ++i) {
          if (vb[i].is_zero()) continue;
          r.accumulate(ma | mb, i, c * vb[i]);
        }
      }
    r.prune();
    return r;
  }

  // Matrix semantics for everything else.
  PolyForm am = to_matrix_form(a), bm = to_matrix_form(b);
  if (am.ambient() != bm.ambient())
    throw Error(ErrorKind::Type, "wedge: incompatible matrix value spaces");
  int n = am.ambient();
  PolyForm r = PolyForm::zero_matrix(d, k, n);
  for (const auto& [ma, va] : am.terms())
    for (const auto& [mb, vb] : bm.terms()) {
      int sg = wedge_sign(ma, mb);
      if (!sg) continue;
      for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
          const Poly& x = va[static_cast<size_t>(i) * n + l];
          if (x.is_zero()) continue;
          for (int j = 0; j < n; ++j) {
            const Poly& y = vb[static_cast<size_t>(l) * n + j];
            if (y.is_zero()) continue;
            Poly prod = x * y;
            r.accumulate(ma | mb, i * n + j, sg < 0 ? -prod : prod);
          }
        }
    }
  r.prune();
  return r;
}

PolyForm bracket(const PolyForm& a, const PolyForm& b) {
  if (a.kind() != b.kind() || (a.kind() != VKind::AlgG && a.kind() != VKind::AlgH))
    throw Error(ErrorKind::Type, "bracket needs two forms valued in the same algebra");
  if (a.module() != b.module()) throw Error(ErrorKind::Type, "bracket across different modules");
  const LieAlgebra& alg = (a.kind() == VKind::AlgG) ? a.module()->g : a.module()->h;
  const Tensor3& c = alg.structure();
  int dim = alg.dim();
  PolyForm r = PolyForm::zero(a.patch_dim(), a.degree() + b.degree(), a.kind(), a.module());
  for (const auto& [ma, va] : a.terms())
    for (const auto& [mb, vb] : b.terms()) {
      int sg = wedge_sign(ma, mb);
      if (!sg) continue;
      for (int i = 0; i < dim; ++i) {
        if (va[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
          if (vb[j].is_zero()) continue;
          Poly prod = va[i] * vb[j];
          if (sg < 0) prod = -prod;
          for (int k = 0; k < dim; ++k) {
            const Rat& s = c(i, j, k);
            if (s != 0) r.accumulate(ma | mb, k, prod.scaled(s));
          }
        }
      }
    }
  r.prune();
  return r;
}

PolyForm wedge_square(const PolyForm& a) {
  if (a.degree() % 2 == 0)
    throw Error(ErrorKind::Type, "wedge_square is the half-bracket only for odd forms");
  return bracket(a, a).scaled(Rat(1, 2));
}

PolyForm act(const PolyForm& wg, const PolyForm& wh) {
  if (wg.kind() != VKind::AlgG || wh.kind() != VKind::AlgH)
    throw Error(ErrorKind::Type, "act needs a g-valued and an h-valued form");
  if (wg.module() != wh.module()) throw Error(ErrorKind::Type, "act across different modules");
  const auto& xm = wg.module();
  const Tensor3& t = xm->action;
  int dg = xm->g.dim(), dh = xm->h.dim();
  PolyForm r = PolyForm::zero(wg.patch_dim(), wg.degree() + wh.degree(), VKind::AlgH, xm);
  for (const auto& [ma, va] : wg.terms())
    for (const auto& [mb, vb] : wh.terms()) {
      int sg = wedge_sign(ma, mb);
      if (!sg) continue;
      for (int a = 0; a < dg; ++a) {
        if (va[a].is_zero()) continue;
        for (int b = 0; b < dh; ++b) {
          if (vb[b].is_zero()) continue;
          Poly prod = va[a] * vb[b];
          if (sg < 0) prod = -prod;
          for (int c = 0; c < dh; ++c) {
            const Rat& s = t(a, b, c);
            if (s != 0) r.accumulate(ma | mb, c, prod.scaled(s));
          }
        }
      }
    }
  r.prune();
  return r;
}

PolyForm alpha_push(const PolyForm& wh) {
  if (wh.kind() != VKind::AlgH) throw Error(ErrorKind::Type, "alpha_push needs an h-valued form");
  const auto& xm = wh.module();
  PolyForm r = PolyForm::zero(wh.patch_dim(), wh.degree(), VKind::AlgG, xm);
  for (const auto& [m, v] : wh.terms())
    for (int b = 0; b < xm->h.dim(); ++b) {
      if (v[b].is_zero()) continue;
      for (int a = 0; a < xm->g.dim(); ++a) {
        const Rat& s = xm->alpha(a, b);
        if (s != 0) r.accumulate(m, a, v[b].scaled(s));
      }
    }
  r.prune();
  return r;
}

PolyForm cov_d(const PolyForm& a, const PolyForm& w) {
  if (a.kind() != VKind::AlgG || a.degree() != 1)
    throw Error(ErrorKind::Type, "covariant derivative needs a g-valued 1-form connection");
  if (w.kind() == VKind::AlgG) return d(w) + bracket(a, w);
  if (w.kind() == VKind::AlgH) return d(w) + act(a, w);
  throw Error(ErrorKind::Type, "cov_d: form must be g- or h-valued");
}

PolyForm pair_forms(const Pairing& p, std::span<const PolyForm> gs, const PolyForm& beta) {
  if (static_cast<int>(gs.size()) != p.n())
    throw Error(ErrorKind::Arity, "pairing expects " + std::to_string(p.n()) + " g-valued forms");
  const auto& xm = p.module();
  int total = beta.degree();
  for (const auto& g : gs) {
    if (g.kind() != VKind::AlgG || g.module() != xm)
      throw Error(ErrorKind::Type, "pairing slot must be g-valued over the pairing's module");
    total += g.degree();
  }
  if (beta.kind() != VKind::AlgH || beta.module() != xm)
    throw Error(ErrorKind::Type, "pairing second argument must be h-valued");
  int d = beta.patch_dim();
  PolyForm r = PolyForm::scalar_zero(d, total);

  int n = p.n();
  std::vector<int> aidx(n, 0);
  // Recursive expansion over terms of each slot; masks merge left to right so
  // the Koszul signs come out of the coefficient wedges in written order.
  struct Frame {
    uint32_t mask;
    Poly coeff;
  };
  std::vector<const std::map<uint32_t, std::vector<Poly>>*> slot_terms;
  for (const auto& g : gs) slot_terms.push_back(&g.terms());

  std::function<void(int, uint32_t, const Poly&)> rec = [&](int slot, uint32_t mask,
                                                            const Poly& coeff) {
    if (slot == n) {
      for (const auto& [mb, vb] : beta.terms()) {
        int sg = wedge_sign(mask, mb);
        if (!sg) continue;
        for (int b = 0; b < xm->h.dim(); ++b) {
          if (vb[b].is_zero()) continue;
          const Rat& pc = p.coeff(aidx, b);
          if (pc == 0) continue;
          Poly c = coeff * vb[b];
          if (sg < 0) c = -c;
          r.accumulate(mask | mb, 0, c.scaled(pc));
        }
      }
      return;
    }
    for (const auto& [mg, vg] : *slot_terms[slot]) {
      int sg = wedge_sign(mask, mg);
      if (!sg) continue;
      for (int a = 0; a < xm->g.dim(); ++a) {
        if (vg[a].is_zero()) continue;
        aidx[slot] = a;
        Poly c = coeff * vg[a];
        if (sg < 0) c = -c;
        rec(slot + 1, mask | mg, c);
      }
    }
  };
  rec(0, 0u, Poly::constant(Rat(1)));
  r.prune();
  return r;
}

PolyForm integrate_param(const PolyForm& w, int param) {
  PolyForm res;
  if (w.kind() == VKind::Matrix) res = PolyForm::zero_matrix(w.patch_dim(), w.degree(), w.ambient());
  else if (w.kind() == VKind::Scalar) res = PolyForm::scalar_zero(w.patch_dim(), w.degree());
  else res = PolyForm::zero(w.patch_dim(), w.degree(), w.kind(), w.module());
  for (const auto& [m, v] : w.terms())
    for (int i = 0; i < w.value_dim(); ++i) {
      if (v[i].is_zero()) continue;
      res.accumulate(m, i, v[i].integrate01(param));
    }
  res.prune();
  return res;
}

PolyForm subst_param(const PolyForm& w, int param, const Rat& value) {
  PolyForm res;
  if (w.kind() == VKind::Matrix) res = PolyForm::zero_matrix(w.patch_dim(), w.degree(), w.ambient());
  else if (w.kind() == VKind::Scalar) res = PolyForm::scalar_zero(w.patch_dim(), w.degree());
  else res = PolyForm::zero(w.patch_dim(), w.degree(), w.kind(), w.module());
  for (const auto& [m, v] : w.terms())
    for (int i = 0; i < w.value_dim(); ++i) {
      if (v[i].is_zero()) continue;
      res.accumulate(m, i, v[i].substituted(param, value));
    }
  res.prune();
  return res;
}

PolyForm partial_param(const PolyForm& w, int param) {
  PolyForm res;
  if (w.kind() == VKind::Matrix) res = PolyForm::zero_matrix(w.patch_dim(), w.degree(), w.ambient());
  else if (w.kind() == VKind::Scalar) res = PolyForm::scalar_zero(w.patch_dim(), w.degree());
  else res = PolyForm::zero(w.patch_dim(), w.degree(), w.kind(), w.module());
  for (const auto& [m, v] : w.terms())
    for (int i = 0; i < w.value_dim(); ++i) {
      if (v[i].is_zero()) continue;
      res.accumulate(m, i, v[i].derivative(param));
    }
  res.prune();
  return res;
}

bool depends_on_param(const PolyForm& w, int param) {
  for (const auto& [m, v] : w.terms())
    for (const auto& p : v)
      if (p.depends_on(param)) return true;
  return false;
}

std::map<uint32_t, std::vector<Rat>> eval_form(const PolyForm& w, std::span<const Rat> point) {
  if (static_cast<int>(point.size()) != w.patch_dim())
    throw Error(ErrorKind::Structural, "evaluation point dimension mismatch");
  std::map<uint32_t, std::vector<Rat>> out;
  for (const auto& [m, v] : w.terms()) {
    std::vector<Rat> vals(w.value_dim(), Rat(0));
    bool nonzero = false;
    for (int i = 0; i < w.value_dim(); ++i) {
      vals[i] = v[i].eval(point);
      if (vals[i] != 0) nonzero = true;
    }
    if (nonzero) out.emplace(m, std::move(vals));
  }
  return out;
}

double max_abs_eval(const PolyForm& w, std::span<const Rat> point) {
  double m = 0.0;
  for (const auto& [mask, vals] : eval_form(w, point))
    for (const auto& v : vals) m = std::max(m, std::fabs(to_double(v)));
  return m;
}

PolyForm apply_linear(const PolyMat& map, const PolyForm& w) {
  if (map.rows() != w.value_dim() || map.cols() != w.value_dim())
    throw Error(ErrorKind::Type, "apply_linear: map shape mismatch");
  PolyForm res;
  if (w.kind() == VKind::Matrix) res = PolyForm::zero_matrix(w.patch_dim(), w.degree(), w.ambient());
  else if (w.kind() == VKind::Scalar) res = PolyForm::scalar_zero(w.patch_dim(), w.degree());
  else res = PolyForm::zero(w.patch_dim(), w.degree(), w.kind(), w.module());
  for (const auto& [m, v] : w.terms())
    for (int i = 0; i < w.value_dim(); ++i) {
      Poly acc;
      for (int j = 0; j < w.value_dim(); ++j) {
        if (v[j].is_zero() || map(i, j).is_zero()) continue;
        acc += map(i, j) * v[j];
      }
      if (!acc.is_zero()) res.accumulate(m, i, acc);
    }
  res.prune();
  return res;
}

}  // namespace higauge
