#pragma once

#include <span>

#include "w22/charges.hpp"
#include "w22/errors.hpp"
#include "w22/qseries.hpp"
#include "w22/verma.hpp"

namespace w22 {

/// Raised when a formula only valid off the minimal-model charges is asked for at c = c_{s,t}.
class MinimalChargeError : public DomainError {
 public:
  MinimalChargeError(const Rational& c, MinimalPair witness);
  const MinimalPair& witness() const { return witness_; }

 private:
  MinimalPair witness_;
};

/// Character of L(c,0,0): q^{-c/24} / prod_{n>=2} (1 - q^n)^2. Throws DomainError at c = 0.
QSeries vacuum_character_w22(const Rational& c, std::size_t order);

/// q^{-c/24} / prod_{n>=2} (1 - q^n), the Virasoro vacuum character away from
/// the minimal-model charges. Throws MinimalChargeError when c = c_{s,t}.
QSeries generic_virasoro_character(const Rational& c, std::size_t order);

/// q^{h1 - c/24} times the graded dimensions of V(c,h1,h2).
QSeries verma_character(const HighestWeight& w, std::size_t order);

/// c - 24 * min(lowest_weights). Throws DomainError on an empty list.
Rational effective_central_charge(const Rational& c, std::span<const Rational> lowest_weights);

}  // namespace w22
