#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "w22/rational.hpp"

namespace w22 {

/// Truncated series q^offset * (a_0 + a_1 q + ... + a_N q^N).
///
/// Coefficients beyond the truncation order N are unknown, not zero, so every
/// operation reports only what both operands determine.
class QSeries {
 public:
  /// `coeffs` must be non-empty; its size fixes the truncation order.
  QSeries(Rational offset, std::vector<Rational> coeffs);

  static QSeries constant(const Rational& value, std::size_t order);

  const Rational& offset() const { return offset_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const& { return coeffs_; }
  std::vector<Rational> coeffs() && { return std::move(coeffs_); }

  /// Coefficient of q^(offset + n); throws DomainError past the truncation order.
  const Rational& coeff(std::size_t n) const;

  QSeries truncated(std::size_t order) const;
  QSeries scaled(const Rational& factor) const;
  /// Multiply by q^shift for a rational shift.
  QSeries shifted(const Rational& shift) const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  Rational offset_;
  std::vector<Rational> coeffs_;
};

/// Cauchy product; offsets add, order is the smaller of the two.
QSeries series_mul(const QSeries& a, const QSeries& b);
/// Sum of two series whose offsets differ by an integer; throws DomainError otherwise.
QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_sub(const QSeries& a, const QSeries& b);

inline QSeries operator*(const QSeries& a, const QSeries& b) { return series_mul(a, b); }
inline QSeries operator+(const QSeries& a, const QSeries& b) { return series_add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return series_sub(a, b); }

/// 1 / prod_{n >= parts_min} (1 - q^n)^exponent to order N. The coefficient of
/// q^k counts `exponent`-coloured multipartitions of k with every part >= parts_min.
QSeries inv_product(int parts_min, int exponent, std::size_t order);

/// Integer coefficients of inv_product, without the Rational wrapper.
std::vector<BigInt> inv_product_counts(int parts_min, int exponent, std::size_t order);

/// Dedekind eta: q^(1/24) prod_{n >= 1} (1 - q^n).
QSeries eta(std::size_t order);

/// 1 / (1 - q)^(m+1) = sum_n C(m+n, m) q^n.
QSeries binomial_geometric(unsigned m, std::size_t order);

}  // namespace w22
