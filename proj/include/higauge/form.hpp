#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "higauge/algebra.hpp"

namespace higauge {

// Value space of an algebra-valued differential form.
enum class VKind { Scalar, AlgG, AlgH, Matrix };

class Pairing;

// Differential form on a coordinate patch with exact polynomial coefficients.
// Terms are keyed by the bitmask of the (strictly increasing) multi-index;
// orientation is canonical, all permutation signs live in the coefficients.
// Each term's value is the coordinate vector of the value-space element:
// basis coordinates for AlgG/AlgH, a single entry for Scalar, and a row-major
// ambient x ambient matrix for Matrix.
class PolyForm {
 public:
  PolyForm() = default;

  static PolyForm zero(int patch_dim, int degree, VKind kind, CrossedModulePtr xm);
  static PolyForm zero_matrix(int patch_dim, int degree, int ambient);
  static PolyForm scalar_zero(int patch_dim, int degree);

  int patch_dim() const { return d_; }
  int degree() const { return k_; }
  VKind kind() const { return kind_; }
  int value_dim() const { return vdim_; }
  int ambient() const { return ambient_; }  // Matrix kind only
  const CrossedModulePtr& module() const { return xm_; }
  const std::map<uint32_t, std::vector<Poly>>& terms() const { return terms_; }

  bool is_zero() const;
  bool operator==(const PolyForm& o) const;

  // Adds c * value into the dx^mask slot (mask bits name coordinates).
  void accumulate(uint32_t mask, int component, const Poly& c);
  const Poly& component(uint32_t mask, int component) const;  // zero if absent

  PolyForm operator+(const PolyForm& o) const;
  PolyForm operator-(const PolyForm& o) const;
  PolyForm operator-() const;
  PolyForm scaled(const Rat& c) const;
  PolyForm scaled(const Poly& c) const;  // c must be a 0-form coefficient (t,s allowed)

  // Drops explicitly stored zero entries.
  void prune();

  std::string str() const;

 private:
  friend PolyForm make_form(int, int, VKind, CrossedModulePtr, int);
  int d_ = 0;
  int k_ = 0;
  VKind kind_ = VKind::Scalar;
  int vdim_ = 1;
  int ambient_ = 0;
  CrossedModulePtr xm_;
  std::map<uint32_t, std::vector<Poly>> terms_;

  void check_compatible(const PolyForm& o) const;
};

// Sign of dx^a ^ dx^b for disjoint masks, 0 if they intersect.
int wedge_sign(uint32_t a, uint32_t b);

// Exterior derivative in the patch coordinates; t and s are inert.
PolyForm d(const PolyForm& w);

// Matrix-semantics wedge: scalar * anything, or matrix-representable values
// multiplied as matrices (AlgG/AlgH values are realized through their bases).
PolyForm wedge(const PolyForm& a, const PolyForm& b);

// Graded bracket through the structure constants; both forms must take values
// in the same algebra.
PolyForm bracket(const PolyForm& a, const PolyForm& b);

// Half the self-bracket: equals the matrix wedge square for odd forms.
PolyForm wedge_square(const PolyForm& a);

// Action of a g-valued form on an h-valued form through the action tensor.
PolyForm act(const PolyForm& wg, const PolyForm& wh);

// Pushforward along alpha: h-valued -> g-valued.
PolyForm alpha_push(const PolyForm& wh);

// dw + [A,w] for g-valued w, dw + A |> w for h-valued w.
PolyForm cov_d(const PolyForm& a, const PolyForm& w);

// Multilinear extension of the pairing: scalar coefficient forms multiply in
// the written argument order, algebra labels contract with the coefficients.
PolyForm pair_forms(const Pairing& p, std::span<const PolyForm> gs, const PolyForm& beta);

// Exact elimination of a homotopy parameter by integration over [0,1].
PolyForm integrate_param(const PolyForm& w, int param);
PolyForm subst_param(const PolyForm& w, int param, const Rat& value);
PolyForm partial_param(const PolyForm& w, int param);
bool depends_on_param(const PolyForm& w, int param);

// Exact evaluation at a rational point: per multi-index, the value components.
std::map<uint32_t, std::vector<Rat>> eval_form(const PolyForm& w, std::span<const Rat> point);

double max_abs_eval(const PolyForm& w, std::span<const Rat> point);

// Value-space conversions.
PolyForm to_matrix_form(const PolyForm& w);  // AlgG/AlgH -> Matrix
// Matrix -> algebra coordinates via exact span solve; throws Error(Structural)
// if some term lies outside the algebra.
PolyForm matrix_to_algebra(const PolyForm& w, const CrossedModulePtr& xm, VKind target);

// Applies a value-space linear map (dim x dim matrix of polynomials in the
// patch coordinates) to every term's coordinate vector.
PolyForm apply_linear(const PolyMat& map, const PolyForm& w);

std::string mask_str(uint32_t mask);

}  // namespace higauge
