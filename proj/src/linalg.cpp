#include "w22/linalg.hpp"

#include "w22/errors.hpp"

namespace w22 {

Rational determinant(Matrix a) {
  std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  }
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Rational inv = Rational(1) / a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      Rational f = a[r][col] * inv;
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  return det;
}

Echelon row_reduce(Matrix a) {
  Echelon e;
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && a[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    Rational inv = Rational(1) / a[r][col];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][col].is_zero()) continue;
      Rational f = a[i][col];
      for (std::size_t k = col; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    e.pivot_cols.push_back(col);
    ++r;
  }
  e.rref = std::move(a);
  return e;
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivot_cols.size(); }

std::vector<std::vector<Rational>> kernel_basis(const Matrix& a) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  Echelon e = row_reduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[free] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = -e.rref[i][free];
    out.push_back(std::move(x));
  }
  return out;
}

bool is_symmetric(const Matrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (a[i][j] != a[j][i]) return false;
    }
  }
  return true;
}

}  // namespace w22
