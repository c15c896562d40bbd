#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "higauge/matrix.hpp"

namespace higauge {

// Error taxonomy used across the library.
enum class ErrorKind { Structural, Type, Arity, Capability };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct ValidationReport {
  struct Item {
    std::string check;        // e.g. "closure", "peiffer", "sy2"
    std::vector<int> indices; // offending basis indices
    std::string detail;
  };
  std::vector<Item> items;

  bool ok() const { return items.empty(); }
  void add(std::string check, std::vector<int> indices, std::string detail = "");
  bool has(const std::string& check, const std::vector<int>& indices) const;
  std::string str() const;
};

// 3-index array of rationals, dims fixed at construction.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(int d0, int d1, int d2)
      : d0_(d0), d1_(d1), d2_(d2), a_(static_cast<size_t>(d0) * d1 * d2, Rat(0)) {}

  Rat& operator()(int i, int j, int k) { return a_[idx(i, j, k)]; }
  const Rat& operator()(int i, int j, int k) const { return a_[idx(i, j, k)]; }
  int dim0() const { return d0_; }
  int dim1() const { return d1_; }
  int dim2() const { return d2_; }
  bool empty() const { return a_.empty(); }

 private:
  size_t idx(int i, int j, int k) const {
    return (static_cast<size_t>(i) * d1_ + j) * d2_ + k;
  }
  int d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<Rat> a_;
};

// Matrix Lie algebra given by an explicit basis of square rational matrices.
// Structure constants satisfy [X_i, X_j] = sum_k c(i,j,k) X_k.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::string name, int ambient, std::vector<RatMat> basis,
             std::vector<std::string> basis_names);

  const std::string& name() const { return name_; }
  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<RatMat>& basis() const { return basis_; }
  const RatMat& basis_matrix(int i) const { return basis_[i]; }
  const std::string& basis_name(int i) const { return names_[i]; }
  const Tensor3& structure() const { return c_; }
  void set_structure(Tensor3 c) { c_ = std::move(c); }

  // Computes structure constants from the basis; throws on non-closure.
  void finalize();

  // Expresses a matrix in basis coordinates; throws Error(Structural) if the
  // matrix is outside the span. The Poly overload handles polynomial entries
  // (the basis itself is rational).
  std::vector<Rat> coords_of(const RatMat& m) const;
  std::vector<Poly> coords_of(const PolyMat& m) const;
  RatMat matrix_of(const std::vector<Rat>& coords) const;
  PolyMat matrix_of(const std::vector<Poly>& coords) const;

  RatMat bracket_matrix(int i, int j) const;  // [X_i, X_j] as a matrix

 private:
  void build_solver();

  std::string name_;
  int ambient_ = 0;
  std::vector<RatMat> basis_;
  std::vector<std::string> names_;
  Tensor3 c_;
  // Solver data: rows of the flattened-basis matrix picked as pivots, and the
  // inverse of the corresponding square submatrix.
  std::vector<int> pivot_rows_;
  RatMat pivot_inv_;
  bool solver_ready_ = false;
};

enum class GroupActionKind {
  Conjugation,  // g acts on both algebras by conjugation (adjoint modules)
  DefiningRep,  // g acts on h-coordinates by plain matrix multiplication
  None,         // no group action supported (validator-only module)
};

// Differential crossed module (h --alpha--> g, action of g on h).
struct CrossedModule {
  std::string name;
  LieAlgebra g;
  LieAlgebra h;
  RatMat alpha;    // dim_g x dim_h: alpha(Y_b) = sum_a alpha(a,b) X_a
  Tensor3 action;  // act(a,b,c): X_a |> Y_b = sum_c act(a,b,c) Y_c
  GroupActionKind group_kind = GroupActionKind::None;

  std::vector<Rat> alpha_coords(const std::vector<Rat>& h_coords) const;
  std::vector<Poly> alpha_coords(const std::vector<Poly>& h_coords) const;
};

using CrossedModulePtr = std::shared_ptr<const CrossedModule>;

ValidationReport validate_lie_algebra(const LieAlgebra& alg);
ValidationReport validate_crossed_module(const CrossedModule& xm);

CrossedModulePtr adjoint_module(LieAlgebra alg);
// h = V with zero bracket, alpha = 0, X |> v = rep(X) v. `rep` holds one
// matrix per basis element of `alg`, all square of size dim(V). `h_basis`
// provides the square-matrix realization of V's coordinate basis.
CrossedModulePtr abelian_rep_module(LieAlgebra alg, const std::vector<RatMat>& rep,
                                    std::vector<RatMat> h_basis, GroupActionKind kind,
                                    std::string name);

// Invariant pairing g^{(x)n} x h -> Rat, stored densely over the bases.
class Pairing {
 public:
  Pairing() = default;
  Pairing(CrossedModulePtr xm, int n);

  const CrossedModulePtr& module() const { return xm_; }
  int n() const { return n_; }
  Rat& coeff(std::span<const int> g_idx, int h_idx);
  const Rat& coeff(std::span<const int> g_idx, int h_idx) const;
  bool is_zero() const;

 private:
  size_t flat(std::span<const int> g_idx, int h_idx) const;
  CrossedModulePtr xm_;
  int n_ = 0;
  std::vector<Rat> a_;
};

// <X_1...X_n, Y> := Str(X_1,...,X_n, alpha(Y)); fully symmetrized trace over
// all n+1 matrix arguments.
Pairing symmetrized_trace_pairing(const CrossedModulePtr& xm, int n);

ValidationReport validate_pairing(const Pairing& p);

// Built-in fixtures addressable by name:
//   adjoint:sl2, adjoint:gl2, adjoint:gl3, abelian:sl2-defining, sabotage:peiffer
CrossedModulePtr builtin_module(const std::string& name);
std::vector<std::string> builtin_module_names();

LieAlgebra sl2();
LieAlgebra gl2();
LieAlgebra gl3();
LieAlgebra nilpotent_line();  // one-dimensional {E}

}  // namespace higauge
