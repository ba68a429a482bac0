#pragma once

#include <vector>

#include "w22/rational.hpp"

namespace w22 {

using Matrix = std::vector<std::vector<Rational>>;

/// Exact determinant by Gaussian elimination over the rationals.
Rational determinant(Matrix a);

/// Reduced row echelon form; pivots are the first nonzero entry in column order.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivot_cols;
};
Echelon row_reduce(Matrix a);

std::size_t rank(const Matrix& a);

/// Basis of the right kernel {x : A x = 0}, one vector per free column, in
/// column order, with a 1 in its free column.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& a);

bool is_symmetric(const Matrix& a);

}  // namespace w22
