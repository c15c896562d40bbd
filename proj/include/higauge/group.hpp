#pragma once

#include "higauge/form.hpp"

namespace higauge {

// Supported gauge-group elements: constant invertible rational matrices and
// exponentials of strictly triangular polynomial matrices (finite series with
// polynomial inverse exp(-N)). Products stay representable because both the
// matrix and its inverse are kept explicitly.
class GroupMap {
 public:
  enum class Kind { Identity, Constant, Unipotent, Product };

  static GroupMap identity(int ambient);
  static GroupMap constant(const RatMat& g);       // throws if singular
  static GroupMap unipotent(const PolyMat& nilp);  // throws if not nilpotent
  // Arbitrary polynomial pair (g, g^-1); verified to multiply to the identity.
  static GroupMap from_matrices(PolyMat g, PolyMat ginv);

  GroupMap compose(const GroupMap& other) const;  // this * other as matrices
  GroupMap inverse_element() const;

  Kind kind() const { return kind_; }
  int ambient() const { return g_.rows(); }
  const PolyMat& matrix() const { return g_; }
  const PolyMat& inverse() const { return ginv_; }
  const PolyMat& nilpotent() const;  // Unipotent kind only
  bool is_identity() const;
  bool is_constant() const;

  // Maurer-Cartan 1-forms as matrix-valued PolyForms on a d-dimensional patch.
  PolyForm dg_g_inverse(int patch_dim) const;  // dg g^-1
  PolyForm g_inverse_dg(int patch_dim) const;  // g^-1 dg

 private:
  GroupMap(Kind k, PolyMat g, PolyMat ginv) : kind_(k), g_(std::move(g)), ginv_(std::move(ginv)) {}
  Kind kind_;
  PolyMat g_, ginv_;
  PolyMat nilp_;
};

// Finite exponential of a nilpotent polynomial matrix; throws Error(Capability)
// if the series does not terminate within the ambient dimension.
PolyMat nilpotent_exp(const PolyMat& n);

// Coordinate matrices of the group action on the module's algebras. Columns
// are the images of basis elements, entries polynomial in the patch
// coordinates. Throws Error(Capability) when the action leaves the span or the
// module supports no group action.
PolyMat ad_on_g(const CrossedModule& xm, const GroupMap& g);     // X -> g X g^-1
PolyMat adinv_on_g(const CrossedModule& xm, const GroupMap& g);  // X -> g^-1 X g
PolyMat act_on_h(const CrossedModule& xm, const GroupMap& g);    // Y -> g |> Y
PolyMat actinv_on_h(const CrossedModule& xm, const GroupMap& g); // Y -> g^-1 |> Y

// g^-1 dg and dg g^-1 re-expressed in g-algebra coordinates.
PolyForm maurer_left_form(const CrossedModulePtr& xm, const GroupMap& g, int patch_dim);
PolyForm maurer_right_form(const CrossedModulePtr& xm, const GroupMap& g, int patch_dim);

class Pairing;

// Integrated invariance <g X1 g^-1 ... g Xn g^-1, g |> Y> = <X1 ... Xn, Y>,
// checked as a polynomial identity on every basis tuple (full symbolic
// expansion for polynomial-entried g).
ValidationReport validate_pairing_invariance(const Pairing& p, const GroupMap& g);

// validate_pairing plus sampled integrated invariance: symbolic unipotent
// elements along every strictly triangular basis direction and a constant
// invertible sample. Modules without a group action skip the sampling.
ValidationReport validate_pairing_full(const Pairing& p);

}  // namespace higauge
