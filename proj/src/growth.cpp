#include "w22/growth.hpp"

#include <algorithm>
#include <cmath>

#include "w22/errors.hpp"

namespace w22 {

std::string to_string(GrowthClass g) {
  switch (g) {
    case GrowthClass::polynomial_consistent: return "polynomial_consistent";
    case GrowthClass::superpolynomial_consistent: return "superpolynomial_consistent";
    case GrowthClass::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

long double log_bigint(const BigInt& a) {
  std::size_t bits = mpz_sizeinbase(a.get_mpz_t(), 2);
  if (bits <= 64) {
    BigInt r = a;
    return std::log(static_cast<long double>(mpz_get_ui(r.get_mpz_t())));
  }
  std::size_t drop = bits - 64;
  BigInt top = a >> static_cast<mp_bitcnt_t>(drop);
  return std::log(static_cast<long double>(mpz_get_ui(top.get_mpz_t()))) +
         static_cast<long double>(drop) * std::log(2.0L);
}

GrowthReport growth_diagnostic(std::span<const BigInt> coeffs, const GrowthConfig& config) {
  if (coeffs.size() < config.min_coeffs) {
    throw DomainError("too few coefficients: " + std::to_string(coeffs.size()) + " < " +
                      std::to_string(config.min_coeffs));
  }
  const std::size_t last = coeffs.size() - 1;
  std::size_t tail = coeffs.size();
  while (tail > 0 && sgn(coeffs[tail - 1]) > 0) --tail;
  if (tail == coeffs.size()) {
    bool all_zero = std::all_of(coeffs.begin() + static_cast<long>(coeffs.size() / 2), coeffs.end(),
                                [](const BigInt& x) { return sgn(x) == 0; });
    throw DomainError(all_zero ? "all-zero tail" : "coefficients are not eventually positive");
  }

  GrowthReport rep;
  rep.config = config;
  std::vector<std::size_t> cps;
  const std::size_t lo = std::max(config.first_checkpoint, tail);
  for (double x = static_cast<double>(last); x >= static_cast<double>(lo); x /= config.checkpoint_ratio) {
    auto n = static_cast<std::size_t>(std::floor(x));
    if (n < lo) break;
    if (cps.empty() || cps.back() != n) cps.push_back(n);
  }
  std::reverse(cps.begin(), cps.end());
  if (cps.size() < std::max<std::size_t>(config.window, 2)) {
    throw DomainError("positive tail too short for " + std::to_string(config.window) + " checkpoints");
  }
  rep.checkpoints = cps;
  for (std::size_t i = 1; i < cps.size(); ++i) {
    long double a0 = log_bigint(coeffs[cps[i - 1]]), a1 = log_bigint(coeffs[cps[i]]);
    long double n0 = static_cast<long double>(cps[i - 1]), n1 = static_cast<long double>(cps[i]);
    rep.exponent_track.push_back(static_cast<double>((a1 - a0) / (std::log(n1) - std::log(n0))));
    rep.sqrt_track.push_back(static_cast<double>((a1 - a0) / (std::sqrt(n1) - std::sqrt(n0))));
  }

  std::size_t w = config.window - 1;  // slopes spanned by the last `window` checkpoints
  auto tail_of = [w](const std::vector<double>& v) {
    return std::vector<double>(v.end() - static_cast<long>(w), v.end());
  };
  auto ex = tail_of(rep.exponent_track), sq = tail_of(rep.sqrt_track);
  auto [ex_lo, ex_hi] = std::minmax_element(ex.begin(), ex.end());
  auto [sq_lo, sq_hi] = std::minmax_element(sq.begin(), sq.end());
  bool poly = (*ex_hi - *ex_lo) < config.poly_spread;
  bool super = *sq_lo > 0 && (*sq_hi - *sq_lo) / *sq_hi < config.super_rel_spread;
  if (poly && !super) {
    rep.classification = GrowthClass::polynomial_consistent;
  } else if (super && !poly) {
    rep.classification = GrowthClass::superpolynomial_consistent;
  }
  rep.window_begin = cps[cps.size() - config.window];
  rep.window_end = last;
  return rep;
}

GrowthReport growth_diagnostic(const QSeries& s, const GrowthConfig& config) {
  std::vector<BigInt> ints;
  ints.reserve(s.coeffs().size());
  for (const auto& c : s.coeffs()) {
    if (!c.is_integer()) throw DomainError("growth diagnostic needs integer coefficients");
    ints.push_back(c.num());
  }
  return growth_diagnostic(ints, config);
}

}  // namespace w22
