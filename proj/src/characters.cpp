#include "w22/characters.hpp"

#include <algorithm>

namespace w22 {

MinimalChargeError::MinimalChargeError(const Rational& c, MinimalPair witness)
    : DomainError("c = " + c.str() + " is the minimal-model charge c_" + witness.str()),
      witness_(witness) {}

namespace {

QSeries from_counts(const Rational& offset, const std::vector<BigInt>& counts) {
  return QSeries(offset, std::vector<Rational>(counts.begin(), counts.end()));
}

}  // namespace

QSeries vacuum_character_w22(const Rational& c, std::size_t order) {
  if (c.is_zero()) {
    throw DomainError("c = 0: the vacuum module L(0,0,0) is one dimensional");
  }
  return from_counts(-c / Rational(24), graded_dims(static_cast<int>(order), true));
}

QSeries generic_virasoro_character(const Rational& c, std::size_t order) {
  if (auto p = is_minimal_charge(c)) throw MinimalChargeError(c, *p);
  return from_counts(-c / Rational(24), inv_product_counts(2, 1, order));
}

QSeries verma_character(const HighestWeight& w, std::size_t order) {
  return from_counts(w.h1 - w.c / Rational(24), graded_dims(static_cast<int>(order), false));
}

Rational effective_central_charge(const Rational& c, std::span<const Rational> lowest_weights) {
  if (lowest_weights.empty()) throw DomainError("effective central charge needs at least one lowest weight");
  return c - Rational(24) * *std::min_element(lowest_weights.begin(), lowest_weights.end());
}

}  // namespace w22
