#include "higauge/generate.hpp"

#include <bit>

namespace higauge {

uint64_t Rng::next() {
  // splitmix64
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
  uint64_t span = static_cast<uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(next() % span);
}

bool Rng::chance(int num, int den) { return uniform(0, den - 1) < num; }

uint64_t derive_seed(uint64_t base, uint64_t index) {
  Rng r(base ^ (0xd1b54a32d192ed03ull * (index + 1)));
  return r.next();
}

Poly gen_poly(Rng& rng, int patch_dim, const GenCaps& caps) {
  int monomials = static_cast<int>(rng.uniform(1, caps.sparsity));
  Poly p;
  for (int m = 0; m < monomials; ++m) {
    Poly::Mono mono;
    int degree = static_cast<int>(rng.uniform(0, caps.degree_cap));
    for (int i = 0; i < degree; ++i) {
      int v = static_cast<int>(rng.uniform(0, patch_dim - 1));
      mono.e[v] += 1;
    }
    long c = rng.uniform(-3, 3);
    if (c == 0) c = 1;
    p += Poly::monomial(mono, Rat(c));
  }
  return p;
}

namespace {

uint32_t gen_mask(Rng& rng, int patch_dim, int degree) {
  uint32_t mask = 0;
  while (std::popcount(mask) < degree)
    mask |= 1u << rng.uniform(0, patch_dim - 1);
  return mask;
}

}  // namespace

PolyForm gen_form(Rng& rng, int patch_dim, int degree, VKind kind, const CrossedModulePtr& xm,
                  const GenCaps& caps, bool force_nonzero) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    PolyForm f = PolyForm::zero(patch_dim, degree, kind, xm);
    for (int comp = 0; comp < f.value_dim(); ++comp) {
      if (!rng.chance(1, 2)) continue;
      int pieces = static_cast<int>(rng.uniform(1, 2));
      for (int q = 0; q < pieces; ++q)
        f.accumulate(gen_mask(rng, patch_dim, degree), comp, gen_poly(rng, patch_dim, caps));
    }
    f.prune();
    if (!force_nonzero || !f.is_zero()) return f;
  }
  // Deterministic fallback: a single guaranteed term.
  PolyForm f = PolyForm::zero(patch_dim, degree, kind, xm);
  f.accumulate((1u << degree) - 1, 0, Poly::var(0));
  return f;
}

TwoConnection gen_connection(const CrossedModulePtr& xm, int patch_dim, const GenCaps& caps,
                             uint64_t seed) {
  Rng rng(seed);
  TwoConnection c;
  c.A = gen_form(rng, patch_dim, 1, VKind::AlgG, xm, caps);
  c.B = gen_form(rng, patch_dim, 2, VKind::AlgH, xm, caps);
  return c;
}

RatMat gen_invertible(Rng& rng, int ambient) {
  RatMat lower = RatMat::identity(ambient);
  RatMat upper = RatMat::identity(ambient);
  for (int i = 0; i < ambient; ++i)
    for (int j = 0; j < i; ++j) lower(i, j) = Rat(rng.uniform(-2, 2));
  for (int i = 0; i < ambient; ++i)
    for (int j = i + 1; j < ambient; ++j) upper(i, j) = Rat(rng.uniform(-2, 2));
  RatMat diag(ambient, ambient);
  const Rat choices[4] = {Rat(1), Rat(-1), Rat(2), Rat(1, 2)};
  for (int i = 0; i < ambient; ++i) diag(i, i) = choices[rng.uniform(0, 3)];
  return lower * diag * upper;
}

namespace {

// Strictly (upper or lower) triangular basis elements support terminating
// exponentials with polynomial inverses.
std::vector<int> nilpotent_basis_elements(const LieAlgebra& alg) {
  std::vector<int> out;
  for (int i = 0; i < alg.dim(); ++i) {
    const RatMat& m = alg.basis_matrix(i);
    bool upper = true, lower = true;
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) {
        if (m(r, c) == 0) continue;
        if (r >= c) upper = false;
        if (r <= c) lower = false;
      }
    if (upper || lower) out.push_back(i);
  }
  return out;
}

}  // namespace

GaugeData gen_gauge(const CrossedModulePtr& xm, int patch_dim, const GenCaps& caps, uint64_t seed,
                    GaugeKindSelect select, uint64_t index) {
  Rng rng(seed);
  int amb = xm->g.ambient();
  int which;
  switch (select) {
    case GaugeKindSelect::IdentityOnly: which = 0; break;
    case GaugeKindSelect::ConstantOnly: which = 1; break;
    case GaugeKindSelect::UnipotentOnly: which = 2; break;
    case GaugeKindSelect::Cycle: default: which = static_cast<int>(index % 3); break;
  }
  GroupMap g = GroupMap::identity(amb);
  if (which == 1) {
    g = GroupMap::constant(gen_invertible(rng, amb));
  } else if (which == 2) {
    auto nil = nilpotent_basis_elements(xm->g);
    if (nil.empty()) {
      g = GroupMap::constant(gen_invertible(rng, amb));
    } else {
      int pick = nil[rng.uniform(0, static_cast<long>(nil.size()) - 1)];
      PolyMat n(amb, amb);
      Poly coeff = gen_poly(rng, patch_dim, caps);
      for (int r = 0; r < amb; ++r)
        for (int c = 0; c < amb; ++c) {
          const Rat& e = xm->g.basis_matrix(pick)(r, c);
          if (e != 0) n(r, c) = coeff.scaled(e);
        }
      g = GroupMap::unipotent(n);
    }
  }
  PolyForm phi = gen_form(rng, patch_dim, 1, VKind::AlgH, xm, caps, /*force_nonzero=*/true);
  return {std::move(g), std::move(phi)};
}

}  // namespace higauge
