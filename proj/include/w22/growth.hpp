#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "w22/qseries.hpp"
#include "w22/rational.hpp"

namespace w22 {

/// Thresholds for the finite-order growth heuristic. Polynomial growth is an
/// asymptotic property, so any verdict from finitely many coefficients is a
/// labelled guess; these defaults separate n^a from exp(k sqrt n) cleanly at
/// a few hundred terms.
struct GrowthConfig {
  std::size_t min_coeffs = 32;
  std::size_t first_checkpoint = 8;
  double checkpoint_ratio = 1.4142135623730951;
  /// Number of trailing checkpoints the classification looks at.
  std::size_t window = 4;
  /// Max spread (max - min) of the log-log slope over the window.
  double poly_spread = 0.25;
  /// Max relative spread of the log-vs-sqrt(n) slope over the window.
  double super_rel_spread = 0.10;
};

enum class GrowthClass { polynomial_consistent, superpolynomial_consistent, inconclusive };

std::string to_string(GrowthClass g);

struct GrowthReport {
  std::vector<std::size_t> checkpoints;
  /// Slope of log a_n against log n between consecutive checkpoints (tends to
  /// the degree for polynomial sequences).
  std::vector<double> exponent_track;
  /// Slope of log a_n against sqrt(n) between consecutive checkpoints (tends to
  /// a positive constant for partition-like sequences, to 0 for polynomial ones).
  std::vector<double> sqrt_track;
  GrowthClass classification = GrowthClass::inconclusive;
  std::size_t window_begin = 0;  // first checkpoint in the classification window
  std::size_t window_end = 0;    // last coefficient index used
  GrowthConfig config;
};

/// Natural log of a positive integer from its leading 64 bits.
long double log_bigint(const BigInt& a);

/// Throws DomainError for fewer than config.min_coeffs coefficients, an all-zero
/// tail, or a tail that is not eventually positive over enough checkpoints.
GrowthReport growth_diagnostic(std::span<const BigInt> coeffs, const GrowthConfig& config = {});

/// Convenience overload; the series must have integer coefficients.
GrowthReport growth_diagnostic(const QSeries& s, const GrowthConfig& config = {});

}  // namespace w22
