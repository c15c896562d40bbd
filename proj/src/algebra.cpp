#include "higauge/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace higauge {

void ValidationReport::add(std::string check, std::vector<int> indices, std::string detail) {
  items.push_back({std::move(check), std::move(indices), std::move(detail)});
}

bool ValidationReport::has(const std::string& check, const std::vector<int>& indices) const {
  for (const auto& it : items)
    if (it.check == check && it.indices == indices) return true;
  return false;
}

std::string ValidationReport::str() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (const auto& it : items) {
    os << it.check << " violated at (";
    for (size_t i = 0; i < it.indices.size(); ++i) os << (i ? "," : "") << it.indices[i];
    os << ")";
    if (!it.detail.empty()) os << ": " << it.detail;
    os << "\n";
  }
  return os.str();
}

LieAlgebra::LieAlgebra(std::string name, int ambient, std::vector<RatMat> basis,
                       std::vector<std::string> basis_names)
    : name_(std::move(name)), ambient_(ambient), basis_(std::move(basis)),
      names_(std::move(basis_names)) {
  if (basis_.empty()) throw Error(ErrorKind::Structural, "empty basis");
  for (const auto& m : basis_)
    if (m.rows() != ambient_ || m.cols() != ambient_)
      throw Error(ErrorKind::Structural, "basis matrix dimension mismatch in " + name_);
  if (names_.size() != basis_.size()) {
    names_.resize(basis_.size());
    for (size_t i = 0; i < basis_.size(); ++i)
      if (names_[i].empty()) names_[i] = "X" + std::to_string(i + 1);
  }
}

void LieAlgebra::build_solver() {
  if (solver_ready_) return;
  int n2 = ambient_ * ambient_;
  int d = dim();
  // Greedily pick rows of the (n2 x d) flattened-basis matrix until full rank.
  RatMat acc(0, 0);
  std::vector<int> picked;
  std::vector<std::vector<Rat>> rows;
  for (int r = 0; r < n2 && static_cast<int>(picked.size()) < d; ++r) {
    std::vector<Rat> row(d);
    for (int i = 0; i < d; ++i) row[i] = basis_[i](r / ambient_, r % ambient_);
    rows.push_back(row);
    picked.push_back(r);
    RatMat trial(static_cast<int>(rows.size()), d);
    for (size_t a = 0; a < rows.size(); ++a)
      for (int b = 0; b < d; ++b) trial(static_cast<int>(a), b) = rows[a][b];
    if (rank(trial) < static_cast<int>(rows.size())) {
      rows.pop_back();
      picked.pop_back();
    }
  }
  if (static_cast<int>(picked.size()) < d)
    throw Error(ErrorKind::Structural, "basis of " + name_ + " is linearly dependent");
  RatMat sq(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) sq(a, b) = rows[a][b];
  pivot_inv_ = inverse(sq);
  pivot_rows_ = picked;
  solver_ready_ = true;
}

std::vector<Rat> LieAlgebra::coords_of(const RatMat& m) const {
  const_cast<LieAlgebra*>(this)->build_solver();
  int d = dim();
  std::vector<Rat> rhs(d);
  for (int a = 0; a < d; ++a)
    rhs[a] = m(pivot_rows_[a] / ambient_, pivot_rows_[a] % ambient_);
  std::vector<Rat> coords(d, Rat(0));
  for (int i = 0; i < d; ++i)
    for (int a = 0; a < d; ++a) coords[i] += pivot_inv_(i, a) * rhs[a];
  // Verify the full matrix, not just the pivot rows.
  if (!(matrix_of(coords) == m))
    throw Error(ErrorKind::Structural, "matrix is not in the span of " + name_);
  return coords;
}

std::vector<Poly> LieAlgebra::coords_of(const PolyMat& m) const {
  const_cast<LieAlgebra*>(this)->build_solver();
  int d = dim();
  std::vector<Poly> coords(d);
  for (int i = 0; i < d; ++i) {
    Poly acc;
    for (int a = 0; a < d; ++a) {
      const Poly& entry = m(pivot_rows_[a] / ambient_, pivot_rows_[a] % ambient_);
      acc += pivot_inv_(i, a) * entry;
    }
    coords[i] = acc;
  }
  if (!(matrix_of(coords) == m))
    throw Error(ErrorKind::Structural, "polynomial matrix is not in the span of " + name_);
  return coords;
}

RatMat LieAlgebra::matrix_of(const std::vector<Rat>& coords) const {
  RatMat m(ambient_, ambient_);
  for (int i = 0; i < dim(); ++i)
    if (coords[i] != 0) m = m + basis_[i].scaled(coords[i]);
  return m;
}

PolyMat LieAlgebra::matrix_of(const std::vector<Poly>& coords) const {
  PolyMat m(ambient_, ambient_);
  for (int i = 0; i < dim(); ++i) {
    if (coords[i].is_zero()) continue;
    for (int r = 0; r < ambient_; ++r)
      for (int c = 0; c < ambient_; ++c)
        m(r, c) += coords[i] * Poly::constant(basis_[i](r, c));
  }
  return m;
}

RatMat LieAlgebra::bracket_matrix(int i, int j) const {
  return basis_[i] * basis_[j] - basis_[j] * basis_[i];
}

void LieAlgebra::finalize() {
  int d = dim();
  c_ = Tensor3(d, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto coords = coords_of(bracket_matrix(i, j));
      for (int k = 0; k < d; ++k) c_(i, j, k) = coords[k];
    }
}

ValidationReport validate_lie_algebra(const LieAlgebra& alg) {
  ValidationReport rep;
  int d = alg.dim();
  for (int i = 0; i < d; ++i)
    if (alg.basis_matrix(i).rows() != alg.ambient() || alg.basis_matrix(i).cols() != alg.ambient())
      rep.add("shape", {i}, "basis matrix is not ambient-square");
  if (!rep.ok()) return rep;

  {
    int n2 = alg.ambient() * alg.ambient();
    RatMat flat(n2, d);
    for (int i = 0; i < d; ++i)
      for (int r = 0; r < n2; ++r)
        flat(r, i) = alg.basis_matrix(i)(r / alg.ambient(), r % alg.ambient());
    if (rank(flat) < d) rep.add("independence", {}, "basis matrices are linearly dependent");
  }

  LieAlgebra work = alg;
  if (alg.structure().empty()) {
    try {
      work.finalize();
    } catch (const Error&) {
      // Localize the non-closed pairs.
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          try {
            (void)alg.coords_of(alg.bracket_matrix(i, j));
          } catch (const Error&) {
            rep.add("closure", {i, j}, "[X_i,X_j] is outside the basis span");
          }
        }
      return rep;
    }
  }
  const Tensor3& c = work.structure();

  // Reconstruction: [X_i,X_j] - sum_k c(i,j,k) X_k = 0.
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      RatMat m = work.bracket_matrix(i, j);
      for (int k = 0; k < d; ++k)
        if (c(i, j, k) != 0) m = m - work.basis_matrix(k).scaled(c(i, j, k));
      if (!m.is_zero()) rep.add("closure", {i, j}, "structure constants do not reproduce the bracket");
    }

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (c(i, j, k) != -c(j, i, k)) {
          rep.add("antisymmetry", {i, j}, "c(i,j,.) != -c(j,i,.)");
          j = d; break;  // one report per (i,j)
        }

  // Jacobi through the structure constants on all basis triples.
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        bool bad = false;
        for (int m = 0; m < d && !bad; ++m) {
          Rat acc(0);
          for (int l = 0; l < d; ++l)
            acc += c(j, k, l) * c(i, l, m) + c(k, i, l) * c(j, l, m) + c(i, j, l) * c(k, l, m);
          if (acc != 0) bad = true;
        }
        if (bad) rep.add("jacobi", {i, j, k});
      }
  return rep;
}

std::vector<Rat> CrossedModule::alpha_coords(const std::vector<Rat>& h_coords) const {
  std::vector<Rat> out(g.dim(), Rat(0));
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < h.dim(); ++b) out[a] += alpha(a, b) * h_coords[b];
  return out;
}

std::vector<Poly> CrossedModule::alpha_coords(const std::vector<Poly>& h_coords) const {
  std::vector<Poly> out(g.dim());
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < h.dim(); ++b) out[a] += alpha(a, b) * h_coords[b];
  return out;
}

ValidationReport validate_crossed_module(const CrossedModule& xm) {
  ValidationReport rep;
  int dg = xm.g.dim(), dh = xm.h.dim();
  if (xm.alpha.rows() != dg || xm.alpha.cols() != dh) {
    rep.add("alpha-shape", {}, "alpha matrix must be dim(g) x dim(h)");
    return rep;
  }
  if (xm.action.dim0() != dg || xm.action.dim1() != dh || xm.action.dim2() != dh) {
    rep.add("action-shape", {});
    return rep;
  }
  const Tensor3& cg = xm.g.structure();
  const Tensor3& ch = xm.h.structure();
  const Tensor3& act = xm.action;

  auto act_on = [&](int a, const std::vector<Rat>& y) {
    std::vector<Rat> out(dh, Rat(0));
    for (int b = 0; b < dh; ++b) {
      if (y[b] == 0) continue;
      for (int c = 0; c < dh; ++c) out[c] += y[b] * act(a, b, c);
    }
    return out;
  };

  // Derivation property: X_a |> [Y_b, Y_c] = [X_a |> Y_b, Y_c] + [Y_b, X_a |> Y_c].
  for (int a = 0; a < dg; ++a)
    for (int b = 0; b < dh; ++b)
      for (int c = 0; c < dh; ++c) {
        bool bad = false;
        for (int m = 0; m < dh && !bad; ++m) {
          Rat lhs(0), rhs(0);
          for (int l = 0; l < dh; ++l) {
            lhs += ch(b, c, l) * act(a, l, m);
            rhs += act(a, b, l) * ch(l, c, m) + act(a, c, l) * ch(b, l, m);
          }
          if (lhs != rhs) bad = true;
        }
        if (bad) rep.add("derivation", {a, b, c});
      }

  // Morphism property: [X_a, X_b] |> Y_c = X_a |> (X_b |> Y_c) - X_b |> (X_a |> Y_c).
  for (int a = 0; a < dg; ++a)
    for (int b = 0; b < dg; ++b)
      for (int c = 0; c < dh; ++c) {
        bool bad = false;
        for (int m = 0; m < dh && !bad; ++m) {
          Rat lhs(0), rhs(0);
          for (int l = 0; l < dg; ++l) lhs += cg(a, b, l) * act(l, c, m);
          for (int l = 0; l < dh; ++l) rhs += act(b, c, l) * act(a, l, m) - act(a, c, l) * act(b, l, m);
          if (lhs != rhs) bad = true;
        }
        if (bad) rep.add("morphism", {a, b, c});
      }

  // Equivariance: alpha(X_a |> Y_b) = [X_a, alpha(Y_b)].
  for (int a = 0; a < dg; ++a)
    for (int b = 0; b < dh; ++b) {
      bool bad = false;
      for (int m = 0; m < dg && !bad; ++m) {
        Rat lhs(0), rhs(0);
        for (int c = 0; c < dh; ++c) lhs += act(a, b, c) * xm.alpha(m, c);
        for (int l = 0; l < dg; ++l) rhs += xm.alpha(l, b) * cg(a, l, m);
        if (lhs != rhs) bad = true;
      }
      if (bad) rep.add("equivariance", {a, b});
    }

  // Peiffer identity: alpha(Y_a) |> Y_b = [Y_a, Y_b].
  for (int a = 0; a < dh; ++a)
    for (int b = 0; b < dh; ++b) {
      std::vector<Rat> y(dh, Rat(0));
      y[b] = Rat(1);
      std::vector<Rat> lhs(dh, Rat(0));
      for (int l = 0; l < dg; ++l) {
        if (xm.alpha(l, a) == 0) continue;
        auto t = act_on(l, y);
        for (int m = 0; m < dh; ++m) lhs[m] += xm.alpha(l, a) * t[m];
      }
      bool bad = false;
      for (int m = 0; m < dh; ++m)
        if (lhs[m] != ch(a, b, m)) { bad = true; break; }
      if (bad) rep.add("peiffer", {a, b});
    }

  return rep;
}

CrossedModulePtr adjoint_module(LieAlgebra alg) {
  auto xm = std::make_shared<CrossedModule>();
  xm->name = "adjoint:" + alg.name();
  if (alg.structure().empty()) alg.finalize();
  xm->g = alg;
  xm->h = alg;
  int d = alg.dim();
  xm->alpha = RatMat::identity(d);
  xm->action = Tensor3(d, d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) xm->action(a, b, c) = alg.structure()(a, b, c);
  xm->group_kind = GroupActionKind::Conjugation;
  return xm;
}

CrossedModulePtr abelian_rep_module(LieAlgebra alg, const std::vector<RatMat>& rep,
                                    std::vector<RatMat> h_basis, GroupActionKind kind,
                                    std::string name) {
  if (alg.structure().empty()) alg.finalize();
  int dg = alg.dim();
  if (static_cast<int>(rep.size()) != dg)
    throw Error(ErrorKind::Structural, "one rep matrix per basis element required");
  int dh = rep[0].rows();
  auto xm = std::make_shared<CrossedModule>();
  xm->name = std::move(name);
  xm->g = std::move(alg);
  int hamb = h_basis[0].rows();
  xm->h = LieAlgebra("abelian" + std::to_string(dh), hamb, std::move(h_basis), {});
  xm->h.set_structure(Tensor3(dh, dh, dh));  // zero bracket
  xm->alpha = RatMat(dg, dh);                // zero morphism
  xm->action = Tensor3(dg, dh, dh);
  for (int a = 0; a < dg; ++a)
    for (int b = 0; b < dh; ++b)
      for (int c = 0; c < dh; ++c) xm->action(a, b, c) = rep[a](c, b);
  xm->group_kind = kind;
  return xm;
}

Pairing::Pairing(CrossedModulePtr xm, int n) : xm_(std::move(xm)), n_(n) {
  if (n_ < 1) throw Error(ErrorKind::Structural, "pairing degree must be >= 1");
  size_t size = 1;
  for (int i = 0; i < n_; ++i) size *= xm_->g.dim();
  size *= xm_->h.dim();
  a_.assign(size, Rat(0));
}

size_t Pairing::flat(std::span<const int> g_idx, int h_idx) const {
  if (static_cast<int>(g_idx.size()) != n_) throw Error(ErrorKind::Arity, "pairing slot count mismatch");
  size_t f = 0;
  for (int i = 0; i < n_; ++i) f = f * xm_->g.dim() + g_idx[i];
  return f * xm_->h.dim() + h_idx;
}

Rat& Pairing::coeff(std::span<const int> g_idx, int h_idx) { return a_[flat(g_idx, h_idx)]; }
const Rat& Pairing::coeff(std::span<const int> g_idx, int h_idx) const { return a_[flat(g_idx, h_idx)]; }

bool Pairing::is_zero() const {
  for (const auto& c : a_)
    if (c != 0) return false;
  return true;
}

namespace {

// Iterates all index tuples of length n with entries < dim.
template <class F>
void for_tuples(int n, int dim, F&& f) {
  std::vector<int> idx(n, 0);
  for (;;) {
    f(idx);
    int p = n - 1;
    while (p >= 0 && ++idx[p] == dim) idx[p--] = 0;
    if (p < 0) return;
  }
}

Rat symmetrized_trace(const std::vector<const RatMat*>& args) {
  int m = static_cast<int>(args.size());
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  Rat acc(0);
  int count = 0;
  do {
    RatMat prod = *args[perm[0]];
    for (int i = 1; i < m; ++i) prod = prod * *args[perm[i]];
    acc += prod.trace();
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc / Rat(count);
}

}  // namespace

Pairing symmetrized_trace_pairing(const CrossedModulePtr& xm, int n) {
  Pairing p(xm, n);
  int dg = xm->g.dim(), dh = xm->h.dim();
  // alpha(Y_b) as matrices, reused across tuples.
  std::vector<RatMat> alpha_mats;
  for (int b = 0; b < dh; ++b) {
    std::vector<Rat> coords(dg);
    for (int a = 0; a < dg; ++a) coords[a] = xm->alpha(a, b);
    alpha_mats.push_back(xm->g.matrix_of(coords));
  }
  for_tuples(n, dg, [&](const std::vector<int>& idx) {
    for (int b = 0; b < dh; ++b) {
      std::vector<const RatMat*> args;
      for (int i : idx) args.push_back(&xm->g.basis_matrix(i));
      args.push_back(&alpha_mats[b]);
      p.coeff(idx, b) = symmetrized_trace(args);
    }
  });
  return p;
}

ValidationReport validate_pairing(const Pairing& p) {
  ValidationReport rep;
  const auto& xm = *p.module();
  int n = p.n(), dg = xm.g.dim(), dh = xm.h.dim();
  const Tensor3& cg = xm.g.structure();
  const Tensor3& act = xm.action;

  // Full symmetry in the g-slots: check all adjacent transpositions.
  for_tuples(n, dg, [&](const std::vector<int>& idx) {
    for (int b = 0; b < dh; ++b)
      for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> sw = idx;
        std::swap(sw[i], sw[i + 1]);
        if (p.coeff(idx, b) != p.coeff(sw, b)) {
          rep.add("sy4", idx, "slot swap " + std::to_string(i));
          return;
        }
      }
  });

  // Infinitesimal invariance: <X_1..X_n, X |> Y> = -sum_i <X_1..[X,X_i]..X_n, Y>.
  for_tuples(n, dg, [&](const std::vector<int>& idx) {
    for (int x = 0; x < dg; ++x)
      for (int y = 0; y < dh; ++y) {
        Rat lhs(0);
        for (int c = 0; c < dh; ++c)
          if (act(x, y, c) != 0) lhs += act(x, y, c) * p.coeff(idx, c);
        Rat rhs(0);
        for (int i = 0; i < n; ++i) {
          std::vector<int> mod = idx;
          for (int l = 0; l < dg; ++l) {
            Rat c = cg(x, idx[i], l);
            if (c == 0) continue;
            mod[i] = l;
            rhs -= c * p.coeff(mod, y);
          }
          mod[i] = idx[i];
        }
        if (lhs != rhs) {
          std::vector<int> where = idx;
          where.push_back(x);
          where.push_back(y);
          rep.add("sy2", where);
          return;
        }
      }
  });

  // alpha-swap: <X_1..alpha(Y_i)..X_n, Y> = <X_1..alpha(Y)..X_n, Y_i>.
  for_tuples(n - 1, dg, [&](const std::vector<int>& rest) {
    for (int slot = 0; slot < n; ++slot)
      for (int yi = 0; yi < dh; ++yi)
        for (int y = 0; y < dh; ++y) {
          Rat lhs(0), rhs(0);
          for (int a = 0; a < dg; ++a) {
            if (xm.alpha(a, yi) != 0) {
              std::vector<int> idx(rest.begin(), rest.end());
              idx.insert(idx.begin() + slot, a);
              lhs += xm.alpha(a, yi) * p.coeff(idx, y);
            }
            if (xm.alpha(a, y) != 0) {
              std::vector<int> idx(rest.begin(), rest.end());
              idx.insert(idx.begin() + slot, a);
              rhs += xm.alpha(a, y) * p.coeff(idx, yi);
            }
          }
          if (lhs != rhs) {
            rep.add("alpha-swap", {slot, yi, y});
            return;
          }
        }
  });

  return rep;
}

LieAlgebra sl2() {
  RatMat H(2, 2), E(2, 2), F(2, 2);
  H(0, 0) = 1; H(1, 1) = -1;
  E(0, 1) = 1;
  F(1, 0) = 1;
  LieAlgebra alg("sl2", 2, {H, E, F}, {"H", "E", "F"});
  alg.finalize();
  return alg;
}

namespace {

LieAlgebra elementary_matrix_algebra(const std::string& name, int n) {
  std::vector<RatMat> basis;
  std::vector<std::string> names;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      RatMat m(n, n);
      m(r, c) = 1;
      basis.push_back(m);
      names.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
    }
  LieAlgebra alg(name, n, std::move(basis), std::move(names));
  alg.finalize();
  return alg;
}

}  // namespace

LieAlgebra gl2() { return elementary_matrix_algebra("gl2", 2); }

LieAlgebra gl3() { return elementary_matrix_algebra("gl3", 3); }

LieAlgebra nilpotent_line() {
  RatMat E(2, 2);
  E(0, 1) = 1;
  LieAlgebra alg("line", 2, {E}, {"E"});
  alg.finalize();
  return alg;
}

CrossedModulePtr builtin_module(const std::string& name) {
  if (name == "adjoint:sl2") return adjoint_module(sl2());
  if (name == "adjoint:gl2") return adjoint_module(gl2());
  if (name == "adjoint:gl3") return adjoint_module(gl3());
  if (name == "abelian:sl2-defining") {
    LieAlgebra g = sl2();
    std::vector<RatMat> rep;
    for (int i = 0; i < g.dim(); ++i) rep.push_back(g.basis_matrix(i));
    // h = Q^2 embedded as strictly upper 3x3 matrices u1 = E13, u2 = E23.
    RatMat u1(3, 3), u2(3, 3);
    u1(0, 2) = 1;
    u2(1, 2) = 1;
    return abelian_rep_module(std::move(g), rep, {u1, u2}, GroupActionKind::DefiningRep,
                              "abelian:sl2-defining");
  }
  if (name == "sabotage:peiffer") {
    auto adj = adjoint_module(sl2());
    auto xm = std::make_shared<CrossedModule>(*adj);
    xm->name = "sabotage:peiffer";
    xm->alpha = RatMat::identity(3).scaled(Rat(2));
    return xm;
  }
  throw Error(ErrorKind::Structural, "unknown fixture '" + name + "'");
}

std::vector<std::string> builtin_module_names() {
  return {"adjoint:sl2", "adjoint:gl2", "adjoint:gl3", "abelian:sl2-defining",
          "sabotage:peiffer"};
}

}  // namespace higauge
