#include "w22/algebra.hpp"

namespace w22 {

std::string Generator::str() const {
  switch (family) {
    case Family::C: return "C";
    case Family::W: return "W(" + std::to_string(mode) + ")";
    case Family::L: return "L(" + std::to_string(mode) + ")";
  }
  return "?";
}

LieCombination::LieCombination(Generator g, Rational coeff) { add(g, coeff); }

void LieCombination::add(const Generator& g, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LieCombination& LieCombination::operator+=(const LieCombination& o) {
  for (const auto& [g, x] : o.terms_) add(g, x);
  return *this;
}

LieCombination LieCombination::scaled(const Rational& f) const {
  LieCombination out;
  for (const auto& [g, x] : terms_) out.add(g, x * f);
  return out;
}

Rational LieCombination::coeff(const Generator& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string LieCombination::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [g, x] : terms_) {
    if (!out.empty()) out += " + ";
    out += x.str() + " * " + g.str();
  }
  return out;
}

namespace {

// Central term shared by [L_m, L_n] and [L_m, W_n].
Rational central_coeff(int m, int n) {
  if (m + n != 0) return Rational(0);
  long mm = m;
  return Rational(mm * mm * mm - mm, 12);
}

}  // namespace

LieCombination bracket(const Generator& a, const Generator& b) {
  LieCombination out;
  if (a.is_central() || b.is_central()) return out;
  if (a.family == Family::W && b.family == Family::W) return out;
  if (a.family == Family::W) {
    // [W_m, X_n] = -[X_n, W_m]
    return bracket(b, a).scaled(Rational(-1));
  }
  // a is L_m.
  int m = a.mode, n = b.mode;
  out.add(Generator{b.family, m + n}, Rational(m - n));
  out.add(Generator::C(), central_coeff(m, n));
  return out;
}

LieCombination bracket(const LieCombination& a, const LieCombination& b) {
  LieCombination out;
  for (const auto& [x, p] : a.terms()) {
    for (const auto& [y, q] : b.terms()) out += bracket(x, y).scaled(p * q);
  }
  return out;
}

LieCombination adjoint(const LieCombination& a) {
  LieCombination out;
  for (const auto& [g, x] : a.terms()) out.add(adjoint(g), x);
  return out;
}

}  // namespace w22
