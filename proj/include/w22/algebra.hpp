#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "w22/rational.hpp"

namespace w22 {

/// Generator families of W(2,2). The enumerator order is the PBW order:
/// central element first, then W, then L.
enum class Family : unsigned char { C = 0, W = 1, L = 2 };

/// One of L(m), W(m) or the central element C (whose mode is always 0).
struct Generator {
  Family family = Family::C;
  int mode = 0;

  static constexpr Generator L(int m) { return {Family::L, m}; }
  static constexpr Generator W(int m) { return {Family::W, m}; }
  static constexpr Generator C() { return {Family::C, 0}; }

  constexpr bool is_central() const { return family == Family::C; }
  constexpr bool lowers() const { return !is_central() && mode < 0; }
  constexpr bool raises() const { return !is_central() && mode > 0; }

  /// Renders as "L(m)", "W(m)" or "C".
  std::string str() const;

  friend constexpr auto operator<=>(const Generator&, const Generator&) = default;
};

/// Finite linear combination of generators with no zero coefficients.
class LieCombination {
 public:
  LieCombination() = default;
  LieCombination(Generator g, Rational coeff = Rational(1));

  void add(const Generator& g, const Rational& coeff);
  LieCombination& operator+=(const LieCombination& o);
  LieCombination scaled(const Rational& f) const;

  bool is_zero() const { return terms_.empty(); }
  const std::map<Generator, Rational>& terms() const& { return terms_; }
  std::map<Generator, Rational> terms() && { return std::move(terms_); }
  Rational coeff(const Generator& g) const;
  std::string str() const;

  friend bool operator==(const LieCombination&, const LieCombination&) = default;

 private:
  std::map<Generator, Rational> terms_;
};

/// Lie bracket of two generators:
///   [L_m, L_n] = (m-n) L_{m+n} + (m^3-m)/12 delta_{m+n,0} C
///   [L_m, W_n] = (m-n) W_{m+n} + (m^3-m)/12 delta_{m+n,0} C
///   [W_m, W_n] = 0, C central.
LieCombination bracket(const Generator& a, const Generator& b);

/// Bilinear extension of `bracket`.
LieCombination bracket(const LieCombination& a, const LieCombination& b);

/// Formal adjoint of the invariant form: L_m -> L_{-m}, W_m -> W_{-m}, C -> C.
constexpr Generator adjoint(const Generator& g) {
  return g.is_central() ? g : Generator{g.family, -g.mode};
}

LieCombination adjoint(const LieCombination& a);

}  // namespace w22
