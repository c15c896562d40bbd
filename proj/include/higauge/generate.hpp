#pragma once

#include <cstdint>

#include "higauge/gauge.hpp"

namespace higauge {

// Deterministic splitmix64-based generator; self-contained so that instance
// streams are identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  uint64_t next();
  // Uniform in [lo, hi], inclusive.
  long uniform(long lo, long hi);
  bool chance(int num, int den);  // true with probability num/den

 private:
  uint64_t state_;
};

uint64_t derive_seed(uint64_t base, uint64_t index);

struct GenCaps {
  int degree_cap = 2;  // total polynomial degree per coefficient
  int sparsity = 3;    // monomials per coefficient
};

// Sparse polynomial in the first `patch_dim` coordinates with integer
// coefficients in [-3,3] \ {0}.
Poly gen_poly(Rng& rng, int patch_dim, const GenCaps& caps);

// Random algebra-valued k-form; every basis component is populated with
// probability 1/2 (at least one term overall when `force_nonzero`).
PolyForm gen_form(Rng& rng, int patch_dim, int degree, VKind kind, const CrossedModulePtr& xm,
                  const GenCaps& caps, bool force_nonzero = false);

TwoConnection gen_connection(const CrossedModulePtr& xm, int patch_dim, const GenCaps& caps,
                             uint64_t seed);

enum class GaugeKindSelect { Cycle, IdentityOnly, ConstantOnly, UnipotentOnly };

// Deterministic gauge data; `index` steers the g-kind when cycling so a suite
// covers identity, constant rational and unipotent polynomial group elements.
GaugeData gen_gauge(const CrossedModulePtr& xm, int patch_dim, const GenCaps& caps, uint64_t seed,
                    GaugeKindSelect select = GaugeKindSelect::Cycle, uint64_t index = 0);

// Constant invertible rational matrix built as (unit lower) * diag * (unit
// upper), so the inverse is exact and entries stay small.
RatMat gen_invertible(Rng& rng, int ambient);

}  // namespace higauge
