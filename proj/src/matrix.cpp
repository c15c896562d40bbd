#include "higauge/matrix.hpp"

namespace higauge {

RatMat inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::runtime_error("inverse: matrix not square");
  int n = m.rows();
  RatMat a = m;
  RatMat inv = RatMat::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a(r, col) != 0) { piv = r; break; }
    if (piv < 0) throw std::runtime_error("inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    Rat p = a(col, col);
    for (int j = 0; j < n; ++j) { a(col, j) /= p; inv(col, j) /= p; }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rat f = a(r, col);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

int rank(RatMat m) {
  int rk = 0;
  int rows = m.rows(), cols = m.cols();
  for (int col = 0; col < cols && rk < rows; ++col) {
    int piv = -1;
    for (int r = rk; r < rows; ++r)
      if (m(r, col) != 0) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != rk)
      for (int j = 0; j < cols; ++j) std::swap(m(piv, j), m(rk, j));
    Rat p = m(rk, col);
    for (int j = 0; j < cols; ++j) m(rk, j) /= p;
    for (int r = 0; r < rows; ++r) {
      if (r == rk || m(r, col) == 0) continue;
      Rat f = m(r, col);
      for (int j = 0; j < cols; ++j) m(r, j) -= f * m(rk, j);
    }
    ++rk;
  }
  return rk;
}

std::vector<Rat> solve_full_column_rank(const RatMat& a, const std::vector<Rat>& b) {
  int rows = a.rows(), cols = a.cols();
  if (static_cast<int>(b.size()) != rows) throw std::runtime_error("solve: rhs size mismatch");
  RatMat m(rows, cols + 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = a(i, j);
    m(i, cols) = b[i];
  }
  int rk = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < cols && rk < rows; ++col) {
    int piv = -1;
    for (int r = rk; r < rows; ++r)
      if (m(r, col) != 0) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != rk)
      for (int j = 0; j <= cols; ++j) std::swap(m(piv, j), m(rk, j));
    Rat p = m(rk, col);
    for (int j = 0; j <= cols; ++j) m(rk, j) /= p;
    for (int r = 0; r < rows; ++r) {
      if (r == rk || m(r, col) == 0) continue;
      Rat f = m(r, col);
      for (int j = 0; j <= cols; ++j) m(r, j) -= f * m(rk, j);
    }
    pivot_col.push_back(col);
    ++rk;
  }
  if (rk < cols) throw std::runtime_error("solve: matrix not of full column rank");
  for (int r = rk; r < rows; ++r)
    if (m(r, cols) != 0) throw std::runtime_error("solve: inconsistent system");
  std::vector<Rat> x(cols, Rat(0));
  for (int i = 0; i < rk; ++i) x[pivot_col[i]] = m(i, cols);
  return x;
}

}  // namespace higauge
