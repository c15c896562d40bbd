#pragma once

#include <memory>

#include "higauge/gauge.hpp"

namespace higauge {

class Pairing;

// Linear interpolation between two 2-connections. A_t and B_t carry the
// homotopy parameter t inside their coefficients.
struct HomotopyFamily {
  TwoConnection c0, c1;
  PolyForm Theta;  // A1 - A0
  PolyForm Phi;    // B1 - B0
  PolyForm A_t, B_t;
};

struct FamilyCurvatures {
  PolyForm F_t, G_t;       // closed-formula curvatures of the family
  PolyForm dF_dt, dG_dt;   // D_t Theta - alpha(Phi), D_t Phi + Theta |> B_t
};

HomotopyFamily interpolate(const TwoConnection& c0, const TwoConnection& c1);

// Closed formulas; `family_curvature_residuals` cross-checks them against
// curvatures(A_t, B_t) and against polynomial t-differentiation.
FamilyCurvatures family_curvatures(const HomotopyFamily& fam);
std::pair<PolyForm, PolyForm> family_curvature_residuals(const HomotopyFamily& fam);

// Formal expressions over the four homotopy generators A_t, B_t, F_t, G_t,
// closed under sums, t/s-polynomial scaling, bracket, action, alpha and the
// invariant pairing. This is the carrier on which the homotopy derivation l_t
// acts: l_t A_t = l_t B_t = 0, l_t F_t = dt Theta, l_t G_t = dt Phi, extended
// as an odd graded derivation. The dt factor is a degree-1 parameter: it
// anticommutes past odd-degree arguments (hence the prefix-degree signs), and
// a second dt annihilates the term.
class CSExpr;
using CSExprPtr = std::shared_ptr<const CSExpr>;

class CSExpr {
 public:
  enum class Op { GenA, GenB, GenF, GenG, Sum, Scale, Bracket, Act, Alpha, Pair };

  Op op() const { return op_; }
  int degree() const { return degree_; }
  VKind vkind() const { return vkind_; }
  const Poly& weight() const { return weight_; }
  const std::vector<CSExprPtr>& kids() const { return kids_; }

  static CSExprPtr genA();
  static CSExprPtr genB();
  static CSExprPtr genF();
  static CSExprPtr genG();
  static CSExprPtr sum(std::vector<CSExprPtr> kids);
  static CSExprPtr scale(Poly w, CSExprPtr e);  // w polynomial in t, s
  static CSExprPtr bracket(CSExprPtr a, CSExprPtr b);
  static CSExprPtr act(CSExprPtr a, CSExprPtr b);
  static CSExprPtr alpha(CSExprPtr e);
  // Slots hold g-valued children, the last argument is the h-valued child.
  static CSExprPtr pair(std::vector<CSExprPtr> slots, CSExprPtr h);

  std::string str() const;

 protected:
  CSExpr(Op op, int degree, VKind vkind) : op_(op), degree_(degree), vkind_(vkind) {}

 private:
  Op op_;
  int degree_;
  VKind vkind_;
  Poly weight_;
  std::vector<CSExprPtr> kids_;
};

// Values bound to the generators. Theta and Phi are computed from the family
// by exact t-differentiation, so l_t F_t = dt (d/dt A_t) stays consistent for
// every polynomial family, not just the linear interpolation.
struct GeneratorEnv {
  PolyForm A, B, F, G;      // t-dependent forms
  PolyForm Theta, Phi;      // dA/dt, dB/dt
  CrossedModulePtr xm;
  const Pairing* pairing = nullptr;

  static GeneratorEnv from_family(const HomotopyFamily& fam, const Pairing& p);
  // One-parameter family A_t = tA, B_t = tB underlying the CS form.
  static GeneratorEnv cs_family(const TwoConnection& c, const Pairing& p);
};

PolyForm eval(const CSExprPtr& e, const GeneratorEnv& env);

// Applies l_t and strips the leading dt factor: returns the unique form w with
// l_t(e) = dt ^ w under the convention that l_t anticommutes past odd-degree
// siblings (prefix-degree signs) with dt stripped in place. The convention is
// pinned by the Cartan-homotopy, transgression and two-path-B test suites
// rather than assumed.
PolyForm eval_lt(const CSExprPtr& e, const GeneratorEnv& env);

// Symbolic exterior derivative through the structural identities
//   dA = F - A^2 + alpha(B),  dB = G - A |> B,
//   dF = [F, A] - alpha(G),   dG = F |> B - A |> G,
// extended as an odd graded derivation (Leibniz through all nodes).
CSExprPtr symbolic_d(const CSExprPtr& e);

// k_{01} = exact t-integral over [0,1] of the stripped l_t image.
PolyForm k01(const CSExprPtr& e, const GeneratorEnv& env);

// The s-integrand of the Chern-Simons (2n+2)-form as an expression:
//   n < A ^ F_s^{n-1}, G_s > + < F_s^n, B >,
// F_s = s F + (s^2 - s) A^2, G_s = s G + (s^2 - s) A |> B.
CSExprPtr cs_integrand(int n);

// The closed invariant polynomial < F^n, G >.
CSExprPtr curvature_polynomial(int n);

}  // namespace higauge
