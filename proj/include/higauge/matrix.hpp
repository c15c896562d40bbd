#pragma once

#include <stdexcept>
#include <vector>

#include "higauge/poly.hpp"
#include "higauge/rational.hpp"

namespace higauge {

// Small dense matrix; T is Rat or Poly. Dimensions here never exceed a few
// dozen entries, so everything is straightforward exact arithmetic.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = unit_value();
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }

  T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

  Mat operator+(const Mat& o) const {
    check_same(o);
    Mat m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
  }

  Mat operator-(const Mat& o) const {
    check_same(o);
    Mat m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
  }

  Mat operator-() const {
    Mat m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
  }

  Mat operator*(const Mat& o) const {
    if (c_ != o.r_) throw std::runtime_error("matrix product shape mismatch");
    Mat m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const T& x = (*this)(i, k);
        if (is_zero_value(x)) continue;
        for (int j = 0; j < o.c_; ++j) m(i, j) += x * o(k, j);
      }
    return m;
  }

  Mat scaled(const T& c) const {
    Mat m = *this;
    for (auto& x : m.a_) x = x * c;
    return m;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!is_zero_value(x)) return false;
    return true;
  }

  T trace() const {
    T t{};
    for (int i = 0; i < r_ && i < c_; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  static bool is_zero_value(const Rat& x) { return x == 0; }
  static bool is_zero_value(const Poly& x) { return x.is_zero(); }
  static T unit_value() {
    if constexpr (std::is_same_v<T, Poly>) return Poly::constant(Rat(1));
    else return T(1);
  }
  void check_same(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::runtime_error("matrix shape mismatch");
  }

  int r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using RatMat = Mat<Rat>;
using PolyMat = Mat<Poly>;

inline PolyMat to_poly(const RatMat& m) {
  PolyMat p(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) p(i, j) = Poly::constant(m(i, j));
  return p;
}

// Exact inverse by Gauss-Jordan; throws if singular.
RatMat inverse(const RatMat& m);

// Solves A x = b exactly for each column of b; throws if inconsistent or
// underdetermined picks are needed (A must have full column rank).
std::vector<Rat> solve_full_column_rank(const RatMat& a, const std::vector<Rat>& b);

// Row-reduces a copy and reports the rank.
int rank(RatMat m);

}  // namespace higauge
