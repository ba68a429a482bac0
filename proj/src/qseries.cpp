#include "w22/qseries.hpp"

#include <algorithm>

#include "w22/errors.hpp"

namespace w22 {

QSeries::QSeries(Rational offset, std::vector<Rational> coeffs)
    : offset_(std::move(offset)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("series needs at least one coefficient");
}

QSeries QSeries::constant(const Rational& value, std::size_t order) {
  std::vector<Rational> c(order + 1, Rational(0));
  c[0] = value;
  return QSeries(Rational(0), std::move(c));
}

const Rational& QSeries::coeff(std::size_t n) const {
  if (n >= coeffs_.size()) {
    throw DomainError("coefficient " + std::to_string(n) + " is beyond truncation order " +
                      std::to_string(order()));
  }
  return coeffs_[n];
}

QSeries QSeries::truncated(std::size_t order) const {
  std::size_t n = std::min(order, this->order());
  return QSeries(offset_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

QSeries QSeries::scaled(const Rational& factor) const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x *= factor;
  return QSeries(offset_, std::move(c));
}

QSeries QSeries::shifted(const Rational& shift) const { return QSeries(offset_ + shift, coeffs_); }

QSeries series_mul(const QSeries& a, const QSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> out(n + 1, Rational(0));
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b.coeffs()[j].is_zero()) continue;
      out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return QSeries(a.offset() + b.offset(), std::move(out));
}

QSeries series_add(const QSeries& a, const QSeries& b) {
  const QSeries& lo = a.offset() <= b.offset() ? a : b;
  const QSeries& hi = a.offset() <= b.offset() ? b : a;
  Rational gap = hi.offset() - lo.offset();
  if (!gap.is_integer()) {
    throw DomainError("cannot add series with offsets " + a.offset().str() + " and " +
                      b.offset().str() + ": they differ by a non-integer");
  }
  std::size_t shift = gap.num().get_ui();
  std::size_t n = std::min(lo.order(), shift + hi.order());
  std::vector<Rational> out(n + 1, Rational(0));
  for (std::size_t k = 0; k <= n; ++k) {
    out[k] = lo.coeffs()[k];
    if (k >= shift) out[k] += hi.coeffs()[k - shift];
  }
  return QSeries(lo.offset(), std::move(out));
}

QSeries series_sub(const QSeries& a, const QSeries& b) { return series_add(a, b.scaled(-1)); }

std::vector<BigInt> inv_product_counts(int parts_min, int exponent, std::size_t order) {
  if (parts_min < 1 || exponent < 1) throw DomainError("inv_product needs parts_min, exponent >= 1");
  std::vector<BigInt> a(order + 1, 0);
  a[0] = 1;
  // Multiplying by 1/(1 - q^n) is a running sum with stride n.
  for (std::size_t n = static_cast<std::size_t>(parts_min); n <= order; ++n) {
    for (int e = 0; e < exponent; ++e) {
      for (std::size_t k = n; k <= order; ++k) a[k] += a[k - n];
    }
  }
  return a;
}

QSeries inv_product(int parts_min, int exponent, std::size_t order) {
  auto counts = inv_product_counts(parts_min, exponent, order);
  std::vector<Rational> c(counts.begin(), counts.end());
  return QSeries(Rational(0), std::move(c));
}

QSeries eta(std::size_t order) {
  std::vector<BigInt> a(order + 1, 0);
  a[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    for (std::size_t k = order; k >= n; --k) a[k] -= a[k - n];
  }
  return QSeries(Rational(1, 24), std::vector<Rational>(a.begin(), a.end()));
}

QSeries binomial_geometric(unsigned m, std::size_t order) {
  std::vector<Rational> c;
  c.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), m + n, m);
    c.emplace_back(b);
  }
  return QSeries(Rational(0), std::move(c));
}

}  // namespace w22
