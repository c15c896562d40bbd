#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "higauge/rational.hpp"

namespace higauge {

// Sparse multivariate polynomial over Rat in patch coordinates x1..x14 plus the
// two homotopy parameters t and s. Coordinates occupy variable slots 0..13;
// t and s sit at fixed slots so polynomials from patches of different dimension
// never alias them.
class Poly {
 public:
  static constexpr int kMaxVars = 16;
  static constexpr int kMaxCoord = 14;
  static constexpr int kT = 14;
  static constexpr int kS = 15;

  struct Mono {
    std::array<uint8_t, kMaxVars> e{};
    auto operator<=>(const Mono&) const = default;
    int total_degree() const;
  };

  Poly() = default;

  static Poly zero() { return Poly(); }
  static Poly constant(Rat c);
  static Poly var(int coord);  // x_{coord}, 0-based, coord < kMaxCoord
  static Poly param_t();
  static Poly param_s();
  static Poly monomial(Mono m, Rat c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // 0 if zero, throws if non-constant
  size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<Mono, Rat>>& terms() const { return terms_; }

  int total_degree() const;          // over all variables incl. t,s
  int degree_in(int var) const;
  bool depends_on(int var) const { return degree_in(var) > 0; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Rat& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Poly derivative(int var) const;
  // Exact definite integral of `param` (kT or kS) over [0,1]; the parameter is
  // eliminated from the result.
  Poly integrate01(int param) const;
  Poly substituted(int var, const Rat& value) const;
  // Evaluate with x_i = point[i]; throws if t or s still present.
  Rat eval(std::span<const Rat> point) const;

  double max_coeff_abs() const;  // 0 for the zero polynomial

  std::string str() const;
  // Grammar: sums/differences of '*'-joined factors; factors are rational
  // literals, x<k> (1-based), t, s, parenthesized subexpressions, with
  // optional ^<uint>.
  static Poly parse(const std::string& text);

 private:
  // Sorted by monomial, no zero coefficients.
  std::vector<std::pair<Mono, Rat>> terms_;
  void normalize();
};

inline Poly operator*(const Rat& c, const Poly& p) { return p.scaled(c); }

}  // namespace higauge
